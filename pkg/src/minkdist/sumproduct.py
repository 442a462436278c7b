"""Exact sizes of sum, product, ratio and cross-ratio sets."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Iterator

from .core import PlanePoint, parse_rational
from .minkowski import rectangular_area_set

_OPS = {
    "sum": lambda a, b: a + b,
    "difference": lambda a, b: a - b,
    "product": lambda a, b: a * b,
}


@dataclass(frozen=True)
class RealSet:
    """Finite set of rationals kept sorted and duplicate-free."""

    elements: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(sorted({Fraction(e) for e in self.elements})))

    @classmethod
    def of(cls, values: Iterable) -> "RealSet":
        return cls(tuple(parse_rational(v) for v in values))

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.elements)

    def __contains__(self, v) -> bool:
        return Fraction(v) in set(self.elements)

    def shifted(self, t) -> "RealSet":
        return RealSet(tuple(e + t for e in self.elements))

    def scaled(self, t) -> "RealSet":
        return RealSet(tuple(e * t for e in self.elements))


def set_op(A: RealSet, B: RealSet, op: str) -> RealSet:
    """``A+B``, ``A-B``, ``A*B`` or ``A:B`` (zero denominators skipped)."""
    if op == "ratio":
        nonzero = [b for b in B if b != 0]
        if not nonzero:
            raise ZeroDivisionError("ratio set needs a nonzero element in B")
        return RealSet(tuple(a / b for a in A for b in nonzero))
    try:
        f = _OPS[op]
    except KeyError:
        raise ValueError(f"unknown set operation {op!r}") from None
    return RealSet(tuple(f(a, b) for a in A for b in B))


def _signed(A: RealSet, B: RealSet, sign: str) -> RealSet:
    return set_op(A, B, {"+": "sum", "-": "difference"}[sign])


def expander_set(A: RealSet, B: RealSet, sign1: str = "-", sign2: str = "-") -> RealSet:
    return set_op(_signed(A, B, sign1), _signed(A, B, sign2), "product")


def expander_as_areas(A: RealSet, B: RealSet, sign1: str = "-", sign2: str = "-") -> set[Fraction]:
    """The same set read as rectangular areas between two grids.

    With ``p = (-e1*b, -e2*b')`` and ``q = (a, a')`` (``e = +-1`` for the
    signs), ``R(p, q) = (a +- b)(a' +- b')``.
    """
    e1 = 1 if sign1 == "+" else -1
    e2 = 1 if sign2 == "+" else -1
    left = [PlanePoint(-e1 * b, -e2 * b2) for b in B for b2 in B]
    right = [PlanePoint(a, a2) for a in A for a2 in A]
    return rectangular_area_set(left, right)


def expander_size(A: RealSet, B: RealSet, sign1: str = "-", sign2: str = "-") -> int:
    """``|(A s1 B)(A s2 B)|``, checked against its rectangular-area form."""
    if len(A) < 2 or len(B) < 2:
        raise ValueError("both sets need at least two elements")
    direct = expander_set(A, B, sign1, sign2)
    if set(direct) != expander_as_areas(A, B, sign1, sign2):
        raise RuntimeError("product set and rectangular-area set disagree")
    return len(direct)


@dataclass
class DirectionCount:
    directions: int  # distinct directions through >= 2 points of A x A, vertical included
    ratio_set: int  # |(A - A) : (A - A)|
    has_vertical: bool


def direction_count(A: RealSet) -> DirectionCount:
    if len(A) < 2:
        raise ValueError("need at least two elements")
    grid = [(a, b) for a in A for b in A]
    slopes = set()
    vertical = False
    for (a1, b1), (a2, b2) in product(grid, repeat=2):
        if (a1, b1) == (a2, b2):
            continue
        if a1 == a2:
            vertical = True
        else:
            slopes.add((b2 - b1) / (a2 - a1))
    diffs = set_op(A, A, "difference")
    ratios = set_op(diffs, diffs, "ratio")
    return DirectionCount(len(slopes) + vertical, len(ratios), vertical)


def three_point_ratio_set(A: RealSet, distinct: bool = False) -> set[Fraction]:
    """``{(a-b)/(b-c)}`` over ``a, b, c`` in A, skipping zero denominators."""
    out = set()
    for a, b, c in product(A, repeat=3):
        if b == c or (distinct and len({a, b, c}) < 3):
            continue
        out.add((a - b) / (b - c))
    return out


def cross_ratio_set(A: RealSet, distinct: bool = False) -> set[Fraction]:
    """``{(a-b)(c-d) / ((b-c)(a-d))}``, skipping zero denominators."""
    out = set()
    for a, b, c, d in product(A, repeat=4):
        den = (b - c) * (a - d)
        if den == 0 or (distinct and len({a, b, c, d}) < 4):
            continue
        out.add((a - b) * (c - d) / den)
    return out


def cross_ratio_sets(A: RealSet, distinct: bool = False) -> tuple[int | None, int | None]:
    """Sizes of the three- and four-variable sets; None where A is too small."""
    three = len(three_point_ratio_set(A, distinct)) if len(A) >= 3 else None
    four = len(cross_ratio_set(A, distinct)) if len(A) >= 4 else None
    return three, four


def multiplication_table_size(n: int) -> int:
    if n < 1:
        raise ValueError("n must be positive")
    return len({i * j for i in range(1, n + 1) for j in range(1, n + 1)})
