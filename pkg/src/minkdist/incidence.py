"""Line family, exact pairwise intersections, rich planes and the counting audit.

Lines are indexed ``i*N + j`` for the line carrying ``P[i]`` to ``P[j]``.
Intersection points are grouped by exact rational coordinates; there is no
tolerance anywhere.
"""

from __future__ import annotations

import math
from collections import Counter, defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator

import numpy as np

from .core import Plane3, Singular, SpacePoint, solve_2x2
from .isometry import IsoLine, line_from_pair
from .minkowski import PointSet

# coordinates (after clearing denominators) below this bound keep every
# intermediate product of the kernel inside int64
_INT64_COORD_LIMIT = 2**29


class IdenticalLines(ValueError):
    """Two line handles describe the same geometric line."""


@dataclass
class LineFamily:
    points: PointSet
    lines: list[IsoLine]

    @property
    def N(self) -> int:
        return self.points.N

    def __len__(self) -> int:
        return len(self.lines)

    def source_index(self, line_index: int) -> int:
        return line_index // self.N

    def target_index(self, line_index: int) -> int:
        return line_index % self.N


def build_line_family(P: PointSet) -> LineFamily:
    lines = [line_from_pair(p, s) for p in P for s in P]
    # distinct (p, s) handles are distinct lines; two lines coincide only if
    # both defining pairs coincide
    if len(set(lines)) != len(lines):
        raise RuntimeError("line family contains repeated lines")
    return LineFamily(P, lines)


def intersect(l1: IsoLine, l2: IsoLine) -> SpacePoint | None:
    """Common point of two lines inside ``z > 0``, or None."""
    (p, s), (q, t) = l1, l2
    # x + p1 z = s1 and x + q1 z = t1
    sol = solve_2x2(1, p.x1, 1, q.x1, s.x1, t.x1)
    if sol is Singular.INCONSISTENT:
        return None
    if sol is Singular.DEGENERATE:
        # the x-equations agree for every z; the y-equations decide
        sol = solve_2x2(1, s.x2, 1, t.x2, p.x2, q.x2)
        if sol is Singular.INCONSISTENT:
            return None
        if sol is Singular.DEGENERATE:
            raise IdenticalLines(f"{l1} and {l2} are the same line")
        y, z = sol
        x = s.x1 - p.x1 * z
    else:
        x, z = sol
        y = p.x2 - s.x2 * z
        if y != q.x2 - t.x2 * z:
            return None
    if z <= 0:
        return None
    return SpacePoint(x, y, z)


# -- exact integer kernel -----------------------------------------------------


def _common_denominator(P: PointSet) -> int:
    d = 1
    for p in P:
        for c in p:
            d = d * c.denominator // math.gcd(d, c.denominator)
    return d


def _line_arrays(P: PointSet, scale: int):
    pts = [(int(p.x1 * scale), int(p.x2 * scale)) for p in P]
    bound = max(max(abs(a), abs(b)) for a, b in pts)
    dtype = np.int64 if bound < _INT64_COORD_LIMIT else object
    n = len(pts)
    xs = np.array([a for a, _ in pts], dtype=dtype)
    ys = np.array([b for _, b in pts], dtype=dtype)
    # line i*n + j carries point i to point j
    p1, p2 = np.repeat(xs, n), np.repeat(ys, n)
    s1, s2 = np.tile(xs, n), np.tile(ys, n)
    return p1, p2, s1, s2


def _kernel(args):
    """All intersecting pairs (i, j), i < j, for i in [lo, hi)."""
    p1, p2, s1, s2, lo, hi = args
    out = []
    for i in range(lo, hi):
        j = np.arange(i + 1, len(p1))
        if not len(j):
            continue
        dp1 = p1[j] - p1[i]
        ds1 = s1[j] - s1[i]
        dp2 = p2[j] - p2[i]
        ds2 = s2[j] - s2[i]
        # both lines sit at the same height z: dp1*z = ds1, ds2*z = dp2
        generic = dp1 != 0
        same_x = (dp1 == 0) & (ds1 == 0)
        ok_generic = generic & (ds1 * ds2 == dp1 * dp2) & (ds1 * dp1 > 0)
        ok_vertical = same_x & (ds2 != 0) & (dp2 * ds2 > 0)
        hit = ok_generic | ok_vertical
        if not hit.any():
            continue
        num = np.where(ok_generic, ds1, dp2)[hit]
        den = np.where(ok_generic, dp1, ds2)[hit]
        num, den = abs(num), abs(den)
        g = np.gcd(num, den)
        zn, zd = num // g, den // g
        X = s1[i] * zd - p1[i] * zn
        Y = p2[i] * zd - s2[i] * zn
        jj = j[hit]
        shared_v = same_x[hit]
        shared_h = ((dp2 == 0) & (ds2 == 0))[hit]
        out.append((np.full(len(jj), i), jj, zn, zd, X, Y, shared_v, shared_h))
    return out


def _chunks(m: int, workers: int) -> list[tuple[int, int]]:
    """Split [0, m) so each piece holds about the same number of pairs."""
    total = m * (m - 1) // 2
    bounds, acc, lo = [], 0, 0
    target = total / max(workers, 1)
    for i in range(m):
        acc += m - 1 - i
        if acc >= target * (len(bounds) + 1) and len(bounds) < workers - 1:
            bounds.append((lo, i + 1))
            lo = i + 1
    bounds.append((lo, m))
    return [b for b in bounds if b[0] < b[1]]


# -- incidence structure ------------------------------------------------------


@dataclass
class IncidencePoint:
    sigma: SpacePoint
    incident: tuple[int, ...]
    n_sigma: int
    n_star_sigma: int | None = None
    k_perp: int | None = None
    k_par: int | None = None

    @property
    def multiplicity(self) -> int:
        return len(self.incident)


@dataclass
class IncidenceStructure:
    """Intersection points of a line family, ordered by ``(z, x, y)``.

    Per-point data lives in parallel arrays; :meth:`point` builds the record
    for one point.
    """

    family: LineFamily
    scale: int
    keys: list[tuple[int, int, int, int]]  # (z num, z den, x*den*scale, y*den*scale)
    offsets: np.ndarray
    incident_flat: np.ndarray
    n: np.ndarray
    shared_vertical: np.ndarray
    shared_horizontal: np.ndarray
    n_star: np.ndarray | None = None
    k_perp: np.ndarray | None = None
    k_par: np.ndarray | None = None
    designated: list[Plane3 | None] | None = None

    @property
    def N(self) -> int:
        return self.family.N

    def __len__(self) -> int:
        return len(self.keys)

    def sigma(self, idx: int) -> SpacePoint:
        zn, zd, X, Y = self.keys[idx]
        d = zd * self.scale
        return SpacePoint(Fraction(X, d), Fraction(Y, d), Fraction(zn, zd))

    def incident(self, idx: int) -> tuple[int, ...]:
        return tuple(int(v) for v in self.incident_flat[self.offsets[idx] : self.offsets[idx + 1]])

    def multiplicity(self, idx: int) -> int:
        return int(self.offsets[idx + 1] - self.offsets[idx])

    def multiplicities(self) -> np.ndarray:
        return np.diff(self.offsets)

    def point(self, idx: int) -> IncidencePoint:
        opt = lambda arr: None if arr is None else int(arr[idx])  # noqa: E731
        return IncidencePoint(
            self.sigma(idx),
            self.incident(idx),
            int(self.n[idx]),
            opt(self.n_star),
            opt(self.k_perp),
            opt(self.k_par),
        )

    def __iter__(self) -> Iterator[IncidencePoint]:
        return (self.point(i) for i in range(len(self)))

    def total_n(self) -> int:
        return int(self.n.sum())


def all_intersections(L: LineFamily, workers: int = 1) -> IncidenceStructure:
    """Every pairwise intersection of ``L`` in ``z > 0``, grouped exactly.

    With ``workers > 1`` the pair range is split across processes; the merge
    sorts by exact coordinates, so the result does not depend on ``workers``.
    """
    P = L.points
    scale = _common_denominator(P)
    p1, p2, s1, s2 = _line_arrays(P, scale)
    m = len(p1)
    jobs = [(p1, p2, s1, s2, lo, hi) for lo, hi in _chunks(m, workers)]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            parts = [blk for res in ex.map(_kernel, jobs) for blk in res]
    else:
        parts = [blk for job in jobs for blk in _kernel(job)]

    dtype = p1.dtype
    if parts:
        cols = [np.concatenate([blk[c] for blk in parts]) for c in range(8)]
    else:
        cols = [np.zeros(0, dtype=np.int64)] * 2 + [np.zeros(0, dtype=dtype)] * 4 + [np.zeros(0, bool)] * 2
    ii, jj, zn, zd, X, Y, sv, sh = cols
    ii, jj = ii.astype(np.int64), jj.astype(np.int64)

    if dtype == object:
        index: dict[tuple, int] = {}
        inverse = np.empty(len(ii), dtype=np.int64)
        for h, key in enumerate(zip(zn.tolist(), zd.tolist(), X.tolist(), Y.tolist())):
            inverse[h] = index.setdefault(key, len(index))
        uniq = list(index)
    else:
        stacked = np.stack([zn, zd, X, Y], axis=1)
        if len(stacked):
            u, inverse = np.unique(stacked, axis=0, return_inverse=True)
            inverse = inverse.reshape(-1)
            uniq = [tuple(r) for r in u.tolist()]
        else:
            uniq, inverse = [], np.zeros(0, dtype=np.int64)

    # exact (z, x, y) ordering; x and y share the positive denominator zd*scale
    order = sorted(
        range(len(uniq)),
        key=lambda u: (Fraction(uniq[u][0], uniq[u][1]), Fraction(uniq[u][2], uniq[u][1]), Fraction(uniq[u][3], uniq[u][1])),
    )
    rank = np.empty(len(uniq), dtype=np.int64)
    rank[order] = np.arange(len(uniq))
    inverse = rank[inverse]
    keys = [uniq[u] for u in order]
    U = len(keys)

    n = np.bincount(inverse, minlength=U)
    shared_v = np.bincount(inverse, weights=sv, minlength=U).astype(np.int64)
    shared_h = np.bincount(inverse, weights=sh, minlength=U).astype(np.int64)

    code = np.unique(np.concatenate([inverse * m + ii, inverse * m + jj]))
    groups, lines = code // m, code % m
    counts = np.bincount(groups, minlength=U)
    offsets = np.concatenate([[0], np.cumsum(counts)]).astype(np.int64)
    if np.any(counts * (counts - 1) // 2 != n):
        raise RuntimeError("pair count at some point disagrees with its incident lines")

    return IncidenceStructure(L, scale, keys, offsets, lines.astype(np.int64), n, shared_v, shared_h)


# -- planes -------------------------------------------------------------------


def vertical_plane(a, b) -> Plane3:
    """``x + a*z = b``."""
    return Plane3.make(1, 0, a, b)


def horizontal_plane(c, d) -> Plane3:
    """``y + c*z = d``."""
    return Plane3.make(0, 1, c, d)


def rich_plane_candidates(l: IsoLine) -> tuple[Plane3, Plane3]:
    """The two axis-type planes through ``l``: ``x + p1 z = s1`` and ``y + s2 z = p2``."""
    return vertical_plane(l.p.x1, l.s.x1), horizontal_plane(l.s.x2, l.p.x2)


def lies_in_plane(l: IsoLine, pi: Plane3) -> bool:
    # substitute x = s1 - p1 z, y = p2 - s2 z: must hold for every z
    a, b, c, d = pi
    return c == a * l.p.x1 + b * l.s.x2 and d == a * l.s.x1 + b * l.p.x2


def coplanar_count(pi: Plane3, L: LineFamily) -> int:
    return sum(lies_in_plane(l, pi) for l in L.lines)


def shares_vertical_plane(l1: IsoLine, l2: IsoLine) -> bool:
    return l1.p.x1 == l2.p.x1 and l1.s.x1 == l2.s.x1


def shares_horizontal_plane(l1: IsoLine, l2: IsoLine) -> bool:
    return l1.p.x2 == l2.p.x2 and l1.s.x2 == l2.s.x2


# -- rich / poor coordinates ---------------------------------------------------


@dataclass
class CoordinateLabels:
    N: int
    abscissa_counts: dict[Fraction, int]
    ordinate_counts: dict[Fraction, int]

    @staticmethod
    def is_rich(count: int, N: int) -> bool:
        # count > 2*sqrt(N), in integers
        return count * count > 4 * N

    def abscissa_rich(self, a: Fraction) -> bool:
        return self.is_rich(self.abscissa_counts.get(a, 0), self.N)

    def ordinate_rich(self, b: Fraction) -> bool:
        return self.is_rich(self.ordinate_counts.get(b, 0), self.N)

    @property
    def abscissae(self) -> dict[Fraction, str]:
        return {a: "rich" if self.abscissa_rich(a) else "poor" for a in self.abscissa_counts}

    @property
    def ordinates(self) -> dict[Fraction, str]:
        return {b: "rich" if self.ordinate_rich(b) else "poor" for b in self.ordinate_counts}


def classify_coordinates(P: PointSet) -> CoordinateLabels:
    return CoordinateLabels(
        P.N,
        dict(sorted(Counter(p.x1 for p in P).items())),
        dict(sorted(Counter(p.x2 for p in P).items())),
    )


@dataclass
class CaseSplit:
    case: int  # 1: one coordinate rich, the other poor; 2: both poor
    points: PointSet
    reflected: bool
    class_sizes: dict[str, int]

    @property
    def rich_orientation(self) -> str:
        return "horizontal" if self.reflected else "vertical"


def case_split(P: PointSet) -> CaseSplit:
    """Pick a quarter of P whose coordinates have a uniform rich/poor pattern.

    Case 2 (both poor) is preferred when it qualifies.  In Case 1 with rich
    ordinates the witness is reflected, so its rich coordinate is always the
    abscissa.
    """
    if P.N < 2:
        raise ValueError("case split needs at least two points")
    labels = classify_coordinates(P)
    classes: dict[str, list] = {"rich_poor": [], "poor_rich": [], "poor_poor": [], "rich_rich": []}
    for p in P:
        key = ("rich" if labels.abscissa_rich(p.x1) else "poor") + "_" + (
            "rich" if labels.ordinate_rich(p.x2) else "poor"
        )
        classes[key].append(p)
    sizes = {k: len(v) for k, v in classes.items()}
    if 4 * sizes["rich_rich"] > P.N:
        raise RuntimeError("more than a quarter of the points have both coordinates rich")
    if 4 * sizes["poor_poor"] >= P.N:
        return CaseSplit(2, PointSet(tuple(classes["poor_poor"])), False, sizes)
    if sizes["rich_poor"] >= sizes["poor_rich"]:
        return CaseSplit(1, PointSet(tuple(classes["rich_poor"])), False, sizes)
    return CaseSplit(1, PointSet(tuple(classes["poor_rich"])).reflected(), True, sizes)


# -- k-rich planes, buckets, stratification -----------------------------------


def is_dyadic(k: int) -> bool:
    return k >= 2 and k & (k - 1) == 0


@dataclass
class RichPlaneRecord:
    plane: Plane3
    line_indices: frozenset[int]
    k_rich_for: frozenset[int] = field(default_factory=frozenset)

    def __len__(self) -> int:
        return len(self.line_indices)


def _axis_plane_groups(L: LineFamily, orientation: str) -> dict[Plane3, list[int]]:
    groups: dict[tuple, list[int]] = defaultdict(list)
    for idx, l in enumerate(L.lines):
        if orientation == "vertical":
            groups[(l.p.x1, l.s.x1)].append(idx)
        elif orientation == "horizontal":
            groups[(l.s.x2, l.p.x2)].append(idx)
        else:
            raise ValueError(f"orientation must be 'vertical' or 'horizontal', not {orientation!r}")
    make = vertical_plane if orientation == "vertical" else horizontal_plane
    return {make(a, b): idxs for (a, b), idxs in sorted(groups.items())}


def k_rich_planes(L: LineFamily, k: int, orientation: str = "vertical") -> list[RichPlaneRecord]:
    """Axis-type planes holding more than ``N*k`` lines of ``L``."""
    if not is_dyadic(k):
        raise ValueError(f"k must be a power of two >= 2, got {k}")
    N = L.N
    out = []
    for plane, idxs in _axis_plane_groups(L, orientation).items():
        c = len(idxs)
        if c > N * k:
            ks = frozenset(2**j for j in range(1, N.bit_length() + 1) if c > N * 2**j)
            out.append(RichPlaneRecord(plane, frozenset(idxs), ks))
    if len(out) * k > N:
        raise RuntimeError(f"{len(out)} planes are {k}-rich, more than N/k")
    return out


def refined_multiplicities(S: IncidenceStructure, planes: list[Plane3] | None = None) -> IncidenceStructure:
    """Fill ``n*`` and, relative to ``planes``, the transverse/parallel split.

    ``n*`` drops every incident pair sharing an axis-type plane (the pairs of
    zero rectangular area).  For each point the designated plane is the one
    from ``planes`` through the point holding most of its incident lines;
    ``k_par`` counts incident lines inside it, ``k_perp`` the rest.
    """
    S.n_star = S.n - S.shared_vertical - S.shared_horizontal
    U = len(S)
    mult = S.multiplicities()
    S.k_perp = mult.copy()
    S.k_par = np.zeros(U, dtype=np.int64)
    S.designated = [None] * U
    if planes:
        lines = S.family.lines
        for idx in range(U):
            sigma = S.sigma(idx)
            inc = S.incident(idx)
            best, best_count = None, -1
            for pi in planes:
                if not pi.contains(sigma):
                    continue
                c = sum(lies_in_plane(lines[li], pi) for li in inc)
                if c > best_count:
                    best, best_count = pi, c
            if best is not None:
                S.designated[idx] = best
                S.k_par[idx] = best_count
                S.k_perp[idx] = mult[idx] - best_count
    return S


def dyadic_bucket(multiplicity: int) -> int:
    """The k = 2**j with ``k <= multiplicity < 2k``."""
    if multiplicity < 2:
        raise ValueError("a point needs at least two incident lines")
    return 1 << (multiplicity.bit_length() - 1)


def dyadic_buckets(S: IncidenceStructure) -> dict[int, list[int]]:
    """Partition the point indices of ``S`` by dyadic multiplicity bucket."""
    out: dict[int, list[int]] = defaultdict(list)
    for idx, m in enumerate(S.multiplicities().tolist()):
        out[dyadic_bucket(m)].append(idx)
    return dict(sorted(out.items()))


@dataclass
class PlaneStratum:
    plane: Plane3
    X: list[int]
    X_perp: list[int]
    X_par: list[int]
    k_perp: dict[int, int]
    k_par: dict[int, int]


@dataclass
class Stratification:
    k: int
    poor: list[int]
    rich: list[int]
    planes: list[PlaneStratum]

    def perp_bound_holds(self, N: int) -> bool:
        # |X_i^perp| <= 2 N^2 / k
        return all(len(st.X_perp) * self.k <= 2 * N * N for st in self.planes)


def stratify(S: IncidenceStructure, bucket: list[int], rich: list[RichPlaneRecord], k: int) -> Stratification:
    """Split ``S_k`` by k-rich line share, then each rich plane's slice by transversality.

    "At least half" ties go to the rich class and to the parallel class.
    """
    rich_lines = set().union(*(r.line_indices for r in rich)) if rich else set()
    poor_idx, rich_idx = [], []
    for idx in bucket:
        inc = S.incident(idx)
        r = sum(li in rich_lines for li in inc)
        (rich_idx if 2 * r >= len(inc) else poor_idx).append(idx)
    strata = []
    for rec in rich:
        X, X_perp, X_par, kp, kq = [], [], [], {}, {}
        for idx in rich_idx:
            if not rec.plane.contains(S.sigma(idx)):
                continue
            inc = S.incident(idx)
            par = sum(li in rec.line_indices for li in inc)
            perp = len(inc) - par
            X.append(idx)
            kp[idx], kq[idx] = perp, par
            (X_perp if 2 * perp > len(inc) else X_par).append(idx)
        strata.append(PlaneStratum(rec.plane, X, X_perp, X_par, kp, kq))
    return Stratification(k, poor_idx, rich_idx, strata)


def incidence_energy(S: IncidenceStructure) -> int:
    """``sum n*(sigma)`` over unordered pairs; four times this is the quadruple energy."""
    if S.n_star is None:
        raise ValueError("run refined_multiplicities first")
    return int(S.n_star.sum())


# -- audit --------------------------------------------------------------------


@dataclass
class BucketSummary:
    k: int
    size: int
    sum_n: int
    sum_n_star: int
    size_ratio: float  # |S_k| k^2 / N^3
    n_star_ratio: float  # sum n* / N^3

    def as_row(self) -> dict:
        return dict(self.__dict__)


@dataclass
class AuditReport:
    N: int
    max_concurrency: int
    concurrency_ok: bool
    source_injective: bool
    max_vertical_coplanar: int
    max_horizontal_coplanar: int
    max_generic_coplanar: int
    generic_ok: bool
    buckets: list[BucketSummary]

    @property
    def max_coplanar(self) -> int:
        return max(self.max_vertical_coplanar, self.max_horizontal_coplanar, self.max_generic_coplanar)


def _max_generic_coplanar(S: IncidenceStructure) -> int:
    """Largest line count over planes with ``alpha*beta != 0`` spanned by intersecting pairs.

    Normalizing ``alpha = 1``, a line lies in ``x + b y + c z = d`` iff
    ``c = p1 + b s2`` and ``d = s1 + b p2``; for each slope ``b`` seen among
    intersecting pairs the lines are bucketed by ``(c, d)``.
    """
    lines = S.family.lines
    slopes = set()
    for idx in range(len(S)):
        inc = S.incident(idx)
        for a in range(len(inc)):
            la = lines[inc[a]]
            for b in range(a + 1, len(inc)):
                lb = lines[inc[b]]
                alpha = lb.s.x2 - la.s.x2
                beta = la.p.x1 - lb.p.x1
                if alpha != 0 and beta != 0:
                    slopes.add(beta / alpha)
    best = 0
    for b in sorted(slopes):
        counts = Counter((l.p.x1 + b * l.s.x2, l.s.x1 + b * l.p.x2) for l in lines)
        best = max(best, max(counts.values()))
    return best


def guth_katz_audit(L: LineFamily, S: IncidenceStructure, generic_planes: bool = True) -> AuditReport:
    N = L.N
    mult = S.multiplicities()
    max_conc = int(mult.max()) if len(mult) else 0
    injective = all(
        len({li // N for li in S.incident(idx)}) == S.multiplicity(idx) for idx in range(len(S))
    )
    vert = max(len(v) for v in _axis_plane_groups(L, "vertical").values())
    horiz = max(len(v) for v in _axis_plane_groups(L, "horizontal").values())
    generic = _max_generic_coplanar(S) if generic_planes else 0
    if S.n_star is None:
        refined_multiplicities(S)
    buckets = []
    for k, idxs in dyadic_buckets(S).items():
        sn = int(S.n[idxs].sum())
        sns = int(S.n_star[idxs].sum())
        buckets.append(BucketSummary(k, len(idxs), sn, sns, len(idxs) * k * k / N**3, sns / N**3))
    return AuditReport(N, max_conc, max_conc <= N, injective, vert, horiz, generic, generic <= N, buckets)
