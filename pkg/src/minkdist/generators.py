"""Seeded point-set and real-set families.

Every family is a pure function of its :class:`FamilySpec`; the same spec
always yields the same set.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from fractions import Fraction

import numpy as np

from .core import PlanePoint
from .minkowski import PointSet
from .sumproduct import RealSet

POINT_FAMILIES = ("grid", "random_rational", "null_line", "rich_abscissa", "perturbed_grid")
SET_FAMILIES = ("progression", "random_set")
FAMILIES = POINT_FAMILIES + SET_FAMILIES


@dataclass
class FamilySpec:
    family: str
    n: int
    m: int | None = None  # second grid side; defaults to n
    seed: int = 0
    max_num: int = 20
    max_den: int = 100
    params: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: dict) -> "FamilySpec":
        return cls(**d)


def _rng(seed: int) -> np.random.Generator:
    return np.random.default_rng(seed & 0xFFFFFFFFFFFFFFFF)


def _random_rational(rng, max_num: int, max_den: int) -> Fraction:
    return Fraction(int(rng.integers(-max_num, max_num + 1)), int(rng.integers(1, max_den + 1)))


def _distinct_rationals(rng, count: int, max_num: int, max_den: int, avoid=()) -> list[Fraction]:
    seen, out = set(avoid), []
    for _ in range(1000 * count + 1000):
        if len(out) == count:
            return out
        v = _random_rational(rng, max_num, max_den)
        if v not in seen:
            seen.add(v)
            out.append(v)
    raise ValueError("value range too small for the requested number of distinct values")


def grid(A, B) -> PointSet:
    return PointSet(tuple(PlanePoint(Fraction(a), Fraction(b)) for a in A for b in B))


def random_rational(n: int, seed: int = 0, max_num: int = 20, max_den: int = 100) -> PointSet:
    rng = _rng(seed)
    pts: dict[PlanePoint, None] = {}
    for _ in range(1000 * n + 1000):
        if len(pts) == n:
            break
        pts.setdefault(PlanePoint(_random_rational(rng, max_num, max_den), _random_rational(rng, max_num, max_den)))
    if len(pts) < n:
        raise ValueError("value range too small for the requested number of distinct points")
    return PointSet(tuple(pts))


def null_line(n: int, seed: int = 0, max_num: int = 20, max_den: int = 100) -> PointSet:
    """``n`` points on one vertical line: every rectangular area vanishes."""
    ys = _distinct_rationals(_rng(seed), n, max_num, max_den)
    return PointSet(tuple(PlanePoint(Fraction(0), y) for y in ys))


def rich_abscissa(n: int, seed: int = 0, max_num: int = 20, max_den: int = 100) -> PointSet:
    """``ceil(n/2)`` points on the line ``x1 = 0``, the rest off it."""
    rng = _rng(seed)
    on = -(-n // 2)
    ys = _distinct_rationals(rng, on, max_num, max_den)
    xs = _distinct_rationals(rng, n - on, max_num, max_den, avoid={Fraction(0)})
    rest = [PlanePoint(x, _random_rational(rng, max_num, max_den)) for x in xs]
    return PointSet(tuple([PlanePoint(Fraction(0), y) for y in ys] + rest))


def perturbed_grid(n: int, m: int | None = None, seed: int = 0) -> PointSet:
    """The ``n x m`` integer grid with each point nudged by its own small offset."""
    m = n if m is None else m
    rng = _rng(seed)
    count = n * m
    dx = rng.choice(np.arange(1, 1000), size=count, replace=False)
    dy = rng.choice(np.arange(1, 1000), size=count, replace=False)
    pts = [
        PlanePoint(Fraction(a) + Fraction(int(dx[k]), 2000), Fraction(b) + Fraction(int(dy[k]), 2000))
        for k, (a, b) in enumerate((a, b) for a in range(1, n + 1) for b in range(1, m + 1))
    ]
    return PointSet(tuple(pts))


def progression(n: int, start=1, step=1) -> RealSet:
    start, step = Fraction(start), Fraction(step)
    if step == 0:
        raise ValueError("step must be nonzero")
    return RealSet(tuple(start + i * step for i in range(n)))


def random_set(n: int, seed: int = 0, max_num: int = 20, max_den: int = 100) -> RealSet:
    return RealSet(tuple(_distinct_rationals(_rng(seed), n, max_num, max_den)))


def generate(spec: FamilySpec) -> PointSet | RealSet:
    f, n, kw = spec.family, spec.n, spec.params
    if n < 1 or (spec.m is not None and spec.m < 1):
        raise ValueError(f"sizes must be positive, got n={n}, m={spec.m}")
    rnd = dict(seed=spec.seed, max_num=spec.max_num, max_den=spec.max_den)
    if f == "grid":
        A = kw.get("A", range(1, n + 1))
        B = kw.get("B", range(1, (spec.m or n) + 1))
        return grid([Fraction(a) for a in A], [Fraction(b) for b in B])
    if f == "random_rational":
        return random_rational(n, **rnd)
    if f == "null_line":
        return null_line(n, **rnd)
    if f == "rich_abscissa":
        return rich_abscissa(n, **rnd)
    if f == "perturbed_grid":
        return perturbed_grid(n, spec.m, seed=spec.seed)
    if f == "progression":
        return progression(n, kw.get("start", 1), kw.get("step", 1))
    if f == "random_set":
        return random_set(n, **rnd)
    raise ValueError(f"unknown family {f!r}; choose from {', '.join(FAMILIES)}")
