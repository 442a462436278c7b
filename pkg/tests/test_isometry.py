from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given

from minkdist.core import PlanePoint, SpacePoint
from minkdist.isometry import (
    IDENTITY,
    Isometry,
    apply,
    compose,
    from_line_coordinates,
    inverse,
    isometry_from_quadruple,
    line_coordinates,
    line_from_pair,
    psi,
    psi_inverse,
)
from minkdist.minkowski import rectangular_area

from .conftest import isometries, plane_points

P = PlanePoint.of


def test_isometry_requires_positive_z():
    with pytest.raises(ValueError):
        Isometry(0, 0, 0)
    with pytest.raises(ValueError):
        Isometry(0, 0, -1)


def test_apply_examples():
    assert apply(IDENTITY, P(3, 4)) == P(3, 4)
    assert apply(Isometry(1, 2, 2), P(3, 4)) == P(7, 4)


@given(isometries, plane_points, plane_points)
def test_area_preserved(phi, p, q):
    assert rectangular_area(apply(phi, p), apply(phi, q)) == rectangular_area(p, q)


def test_compose_example_pointwise():
    phi2, phi1 = Isometry(1, 0, 2), Isometry(0, 1, 3)
    c = compose(phi2, phi1)
    assert c.z == 6
    for pt in (P(0, 0), P(1, -2), P("1/3", 5)):
        assert apply(c, pt) == apply(phi2, apply(phi1, pt))


@given(isometries, isometries, isometries)
def test_group_laws(a, b, c):
    assert compose(a, compose(b, c)) == compose(compose(a, b), c)
    assert compose(a, IDENTITY) == a == compose(IDENTITY, a)
    assert compose(a, inverse(a)) == IDENTITY == compose(inverse(a), a)
    assert inverse(inverse(a)) == a


def test_inverse_examples():
    assert inverse(IDENTITY) == IDENTITY
    assert inverse(Isometry(1, 2, 2)) == Isometry(Fraction(-1, 2), -4, Fraction(1, 2))


def test_quadruple_direct():
    p, q, s, t = P(0, 0), P(1, 1), P(2, 3), P(3, 4)
    phi, swapped = isometry_from_quadruple(p, q, s, t)
    assert phi == Isometry(2, 3, 1) and not swapped
    assert apply(phi, q) == t


def test_quadruple_forced_swap():
    p, q = P(0, 0), P(1, 1)
    phi, swapped = isometry_from_quadruple(p, q, q, p)
    assert phi == IDENTITY and swapped


def test_quadruple_zero_area_excluded():
    # p, q share an abscissa and s, t an ordinate: both areas vanish
    assert isometry_from_quadruple(P(0, 0), P(0, 1), P(0, 0), P(1, 0)) is None
    assert isometry_from_quadruple(P(0, 0), P(1, 1), P(0, 0), P(1, 2)) is None


@given(plane_points, plane_points, isometries)
def test_quadruple_recovers_isometry(p, q, phi):
    if rectangular_area(p, q) == 0:
        return
    s, t = apply(phi, p), apply(phi, q)
    got, swapped = isometry_from_quadruple(p, q, s, t)
    assert not swapped and got == phi
    got, swapped = isometry_from_quadruple(p, q, t, s)
    assert swapped and got == phi


def test_psi_examples():
    assert psi(IDENTITY) == SpacePoint.of(0, 0, 1)
    assert psi(Isometry(1, 2, 2)) == SpacePoint.of(1, 4, 2)
    assert psi_inverse(SpacePoint.of(0, 0, 1)) == IDENTITY
    assert psi_inverse(SpacePoint.of(1, 4, 2)) == Isometry(1, 2, 2)
    with pytest.raises(ValueError):
        psi_inverse(SpacePoint.of(1, 1, 0))


@given(isometries)
def test_psi_round_trip(phi):
    assert psi_inverse(psi(phi)) == phi
    assert from_line_coordinates(line_coordinates(phi)) == phi


def test_line_examples():
    l = line_from_pair(P(0, 0), P(0, 0))
    assert l.point_at(5) == SpacePoint.of(0, 0, 5)
    l = line_from_pair(P(0, 0), P(1, 1))
    assert l.point_at(3) == SpacePoint.of(1, -3, 3)
    assert l.contains(SpacePoint.of(1, "-1/2", "1/2"))
    assert not l.contains(SpacePoint.of(1, 1, -1))


@given(isometries, plane_points, plane_points)
def test_coset_line_membership(phi, p, s):
    l = line_from_pair(p, s)
    assert l.contains_isometry(phi) == (apply(phi, p) == s)
    # the isometries sending p to s, in raw psi coordinates, lie on the
    # unreflected line x = s1 - p1 z, y = s2 z - p2
    if apply(phi, p) == s:
        x, y, z = psi(phi)
        assert (x, y) == (s.x1 - p.x1 * z, s.x2 * z - p.x2)


@given(isometries, plane_points)
def test_line_points_are_isometries_of_the_coset(phi, p):
    s = apply(phi, p)
    l = line_from_pair(p, s)
    for z in (Fraction(1, 3), Fraction(2), Fraction(7, 5)):
        assert apply(from_line_coordinates(l.point_at(z)), p) == s


def test_lines_coincide_only_for_same_pair():
    pts = [P(0, 0), P(1, 0), P(0, 1), P(1, 1), P(2, 3)]
    zs = [Fraction(1), Fraction(2), Fraction(1, 2)]
    for (p, s), (q, t) in product(product(pts, repeat=2), repeat=2):
        l1, l2 = line_from_pair(p, s), line_from_pair(q, t)
        same = all(l1.point_at(z) == l2.point_at(z) for z in zs)
        assert same == ((p, s) == (q, t))


def test_isometry_text_form():
    assert str(Isometry(Fraction(-1, 2), -4, Fraction(1, 2))) == "(-1/2; -4; 1/2)"
