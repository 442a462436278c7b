from fractions import Fraction

import pytest

from minkdist.generators import FAMILIES, FamilySpec, generate, grid, null_line, rich_abscissa
from minkdist.minkowski import PointSet, distance_set
from minkdist.sumproduct import RealSet


@pytest.mark.parametrize("family", FAMILIES)
def test_same_seed_same_output(family):
    spec = FamilySpec(family, 6, seed=11)
    assert generate(spec) == generate(FamilySpec.from_dict(spec.to_dict()))


@pytest.mark.parametrize("family", ["random_rational", "null_line", "rich_abscissa", "perturbed_grid"])
def test_seed_changes_output(family):
    assert generate(FamilySpec(family, 6, seed=1)) != generate(FamilySpec(family, 6, seed=2))


def test_grid_family():
    g = generate(FamilySpec("grid", 2))
    assert g == grid([1, 2], [1, 2]) and g.N == 4
    assert generate(FamilySpec("grid", 2, m=3)).N == 6


def test_grid_explicit_sides():
    g = generate(FamilySpec("grid", 2, params={"A": ["1/2", 3], "B": [0]}))
    assert {tuple(p) for p in g} == {(Fraction(1, 2), 0), (3, 0)}


def test_null_line_is_degenerate():
    for n in range(1, 8):
        P = null_line(n, seed=n)
        assert P.N == n and distance_set(P) == {0}


def test_rich_abscissa_structure():
    for n in range(2, 12):
        P = rich_abscissa(n, seed=n)
        on = sum(p.x1 == 0 for p in P)
        assert P.N == n and on == -(-n // 2)


def test_perturbed_grid_breaks_axis_alignment():
    P = generate(FamilySpec("perturbed_grid", 3, m=4, seed=5))
    assert P.N == 12
    assert len({p.x1 for p in P}) == 12 and len({p.x2 for p in P}) == 12


def test_set_families():
    A = generate(FamilySpec("progression", 4, params={"start": 0, "step": "1/2"}))
    assert isinstance(A, RealSet) and A == RealSet.of([0, "1/2", 1, "3/2"])
    B = generate(FamilySpec("random_set", 7, seed=3))
    assert len(B) == 7


def test_invalid_specs():
    with pytest.raises(ValueError):
        generate(FamilySpec("grid", 0))
    with pytest.raises(ValueError):
        generate(FamilySpec("spiral", 3))
    with pytest.raises(ValueError):
        generate(FamilySpec("random_rational", 50, max_num=1, max_den=1))


def test_random_points_are_distinct():
    P = generate(FamilySpec("random_rational", 30, seed=9, max_num=3, max_den=3))
    assert isinstance(P, PointSet) and P.N == 30
