from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import strategies as st

from minkdist.core import PlanePoint
from minkdist.generators import FamilySpec, generate
from minkdist.isometry import Isometry

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
positive_rationals = st.fractions(min_value=Fraction(1, 12), max_value=12, max_denominator=12)
plane_points = st.builds(PlanePoint, rationals, rationals)
isometries = st.builds(Isometry, rationals, rationals, positive_rationals)


def small_instances(max_n: int = 8):
    """Point sets of every family with 2 <= N <= max_n."""
    out = []
    for n in range(2, max_n + 1):
        for seed in range(21):
            out.append(("random_rational", generate(FamilySpec("random_rational", n, seed=seed, max_num=4, max_den=3))))
        for seed in range(4):
            out.append(("rich_abscissa", generate(FamilySpec("rich_abscissa", n, seed=seed, max_num=4, max_den=2))))
        out.append(("null_line", generate(FamilySpec("null_line", n, seed=n))))
    for a in range(1, 5):
        for b in range(1, 5):
            if 2 <= a * b <= max_n:
                out.append(("grid", generate(FamilySpec("grid", a, m=b))))
                out.append(("perturbed_grid", generate(FamilySpec("perturbed_grid", a, m=b, seed=a * 10 + b))))
    return out


# -- acceptance reporting -------------------------------------------------------

ACCEPTANCE: list[tuple[str, bool, str]] = []


class _Criterion:
    def __init__(self, name: str):
        self.name = name
        self.detail = ""

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc, tb):
        ACCEPTANCE.append((self.name, exc_type is None, self.detail if exc_type is None else f"{self.detail} {exc}"))
        return False


@pytest.fixture
def criterion():
    return _Criterion


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}".rstrip())
