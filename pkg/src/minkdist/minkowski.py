"""Rectangular areas (squared Minkowski distances) and their counting statistics."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Iterable, Iterator, Sequence

from .core import PlanePoint

DEFAULT_BF_CAP = 12


class CapExceeded(ValueError):
    """A brute-force routine was asked to run above its configured size cap."""


@dataclass(frozen=True)
class PointSet:
    """Ordered collection of pairwise distinct points, in light-cone coordinates."""

    points: tuple[PlanePoint, ...]

    def __post_init__(self):
        pts = tuple(PlanePoint(Fraction(p[0]), Fraction(p[1])) for p in self.points)
        object.__setattr__(self, "points", pts)
        if not pts:
            raise ValueError("a point set needs at least one point")
        seen = set()
        for i, p in enumerate(pts):
            if p in seen:
                raise ValueError(f"duplicate point at index {i}: {p}")
            seen.add(p)

    @classmethod
    def of(cls, pairs: Iterable[Sequence]) -> "PointSet":
        return cls(tuple(PlanePoint.of(a, b) for a, b in pairs))

    @property
    def N(self) -> int:
        return len(self.points)

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[PlanePoint]:
        return iter(self.points)

    def __getitem__(self, i: int) -> PlanePoint:
        return self.points[i]

    def reflected(self) -> "PointSet":
        """Image under ``(x1, x2) -> (x2, x1)``."""
        return PointSet(tuple(p.reflected() for p in self.points))


def rectangular_area(p: PlanePoint, q: PlanePoint) -> Fraction:
    """Signed area of the axis-parallel rectangle with diagonal pq."""
    return (q.x1 - p.x1) * (q.x2 - p.x2)


def rectangular_area_set(P: Iterable[PlanePoint], Q: Iterable[PlanePoint]) -> set[Fraction]:
    """``R(P, Q) = {R(p, q) : p in P, q in Q}``."""
    Q = list(Q)
    return {rectangular_area(p, q) for p in P for q in Q}


def distance_set(P: PointSet, nonzero: bool = False) -> set[Fraction]:
    """``R(P)``; with ``nonzero=True`` the zero area is dropped (``R*(P)``)."""
    values = rectangular_area_set(P, P)
    if nonzero:
        values.discard(Fraction(0))
    return values


@dataclass
class AreaSpectrum:
    """Realisation counts ``n(x)`` over ordered pairs, diagonal included."""

    counts: dict[Fraction, int]
    N: int

    @property
    def zero_pairs(self) -> int:
        return self.counts.get(Fraction(0), 0)

    def nonzero_counts(self) -> dict[Fraction, int]:
        return {x: c for x, c in self.counts.items() if x != 0}

    def total(self) -> int:
        return sum(self.counts.values())


def area_spectrum(P: PointSet) -> AreaSpectrum:
    counts = Counter(rectangular_area(p, q) for p, q in product(P, repeat=2))
    return AreaSpectrum(dict(sorted(counts.items())), P.N)


def quadruple_energy(P: PointSet) -> int:
    """Number of ordered quadruples (p, q, s, t) with ``R(p,q) = R(s,t) != 0``."""
    return sum(c * c for c in area_spectrum(P).nonzero_counts().values())


def enumerate_quadruples(P: PointSet, cap: int = DEFAULT_BF_CAP) -> list[tuple[PlanePoint, ...]]:
    """All rectangular quadruples by direct O(N^4) search.

    Deliberately naive; it is the reference the incidence pipeline is checked against.
    """
    if P.N > cap:
        raise CapExceeded(f"N={P.N} exceeds brute-force cap {cap}")
    found = []
    for p, q, s, t in product(P, repeat=4):
        r = rectangular_area(p, q)
        if r != 0 and r == rectangular_area(s, t):
            found.append((p, q, s, t))
    return found


def max_axis_line_load(P: PointSet) -> int:
    """Most points of P sharing one abscissa or one ordinate (a null line)."""
    xs = Counter(p.x1 for p in P)
    ys = Counter(p.x2 for p in P)
    return max(max(xs.values()), max(ys.values()))


def on_single_null_line(P: PointSet) -> bool:
    """True when every point shares one abscissa or one ordinate."""
    return len({p.x1 for p in P}) == 1 or len({p.x2 for p in P}) == 1


@dataclass
class CauchySchwarzReport:
    N: int
    nonzero_pair_count: int  # sum over x != 0 of n(x)
    energy: int  # Q
    distinct_nonzero: int  # |R*(P)|
    distinct_total: int  # |R(P)|
    zero_pairs: int
    max_axis_line_load: int
    lhs: int = field(init=False)
    rhs: int = field(init=False)

    def __post_init__(self):
        self.lhs = self.nonzero_pair_count ** 2
        self.rhs = self.energy * self.distinct_nonzero

    @property
    def holds(self) -> bool:
        return self.lhs <= self.rhs

    @property
    def pair_identity_holds(self) -> bool:
        return self.nonzero_pair_count + self.zero_pairs == self.N ** 2

    def as_dict(self) -> dict:
        return {
            "N": self.N,
            "sum_nonzero_n": self.nonzero_pair_count,
            "Q": self.energy,
            "distinct_nonzero": self.distinct_nonzero,
            "distinct_total": self.distinct_total,
            "zero_pairs": self.zero_pairs,
            "max_axis_line_load": self.max_axis_line_load,
            "cs_lhs": self.lhs,
            "cs_rhs": self.rhs,
            "cs_holds": self.holds,
            "pair_identity_holds": self.pair_identity_holds,
        }


def cauchy_schwarz_report(P: PointSet) -> CauchySchwarzReport:
    """Exact ingredients of ``(sum_{x!=0} n(x))^2 <= Q * |R*(P)|``."""
    if P.N < 2:
        raise ValueError("Cauchy-Schwarz report needs at least two points")
    spec = area_spectrum(P)
    nz = spec.nonzero_counts()
    return CauchySchwarzReport(
        N=P.N,
        nonzero_pair_count=sum(nz.values()),
        energy=sum(c * c for c in nz.values()),
        distinct_nonzero=len(nz),
        distinct_total=len(spec.counts),
        zero_pairs=spec.zero_pairs,
        max_axis_line_load=max_axis_line_load(P),
    )
