"""Report builders behind the command line.

Each builder returns a JSON-ready dict and a status code.  The only floats
anywhere are the logarithmic ratios computed here for display.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .core import format_rational
from .incidence import (
    all_intersections,
    build_line_family,
    case_split,
    dyadic_buckets,
    guth_katz_audit,
    incidence_energy,
    k_rich_planes,
    refined_multiplicities,
    stratify,
)
from .minkowski import (
    DEFAULT_BF_CAP,
    CapExceeded,
    PointSet,
    cauchy_schwarz_report,
    distance_set,
    enumerate_quadruples,
    on_single_null_line,
    quadruple_energy,
)
from .sumproduct import RealSet, cross_ratio_sets, direction_count, expander_size, multiplication_table_size

OK, IDENTITY_FAILED, USAGE, HYPOTHESIS_WARNING = 0, 1, 2, 3
DEFAULT_N_CAP = 64
FLOAT_NOTE = "float fields are log-based ratios computed for display only; all checks are exact"


def _plane(pi) -> list[str]:
    return [format_rational(c) for c in pi]


def distinct_ratio(distinct: int, N: int) -> float | None:
    """``|R(P)| log N / N``."""
    return distinct * math.log(N) / N if N > 1 else None


def energy_ratio(Q: int, N: int) -> float | None:
    """``Q / (N^3 log N)``."""
    return Q / (N**3 * math.log(N)) if N > 1 else None


def distances_report(P: PointSet) -> tuple[dict, int]:
    R = distance_set(P)
    hypothesis = not on_single_null_line(P)
    report = {
        "N": P.N,
        "distinct": len(R),
        "distinct_nonzero": len(R - {Fraction(0)}),
        "ratio_distinct_logN_over_N": distinct_ratio(len(R), P.N),
        "hypothesis_not_on_one_null_line": hypothesis,
        "cauchy_schwarz": None,
        "note": FLOAT_NOTE,
    }
    status = OK
    if P.N >= 2:
        cs = cauchy_schwarz_report(P)
        report["cauchy_schwarz"] = cs.as_dict()
        if not (cs.holds and cs.pair_identity_holds):
            status = IDENTITY_FAILED
    if status == OK and not hypothesis and P.N >= 2:
        status = HYPOTHESIS_WARNING
    return report, status


def incidence_report(
    P: PointSet, bf_cap: int = DEFAULT_BF_CAP, n_cap: int = DEFAULT_N_CAP, workers: int = 1
) -> tuple[dict, list[dict], int]:
    """Full pipeline: intersections, refinement, rich planes, strata and audit."""
    if P.N > n_cap:
        raise CapExceeded(
            f"N={P.N} exceeds the incidence cap {n_cap}; the pairwise stage costs O(N^4) "
            f"exact solves, raise --n-cap if you accept that"
        )
    L = build_line_family(P)
    S = all_intersections(L, workers=workers)
    split = case_split(P) if P.N >= 2 else None
    orientation = split.rich_orientation if split else "vertical"
    two_rich = k_rich_planes(L, 2, orientation) if P.N >= 2 else []
    refined_multiplicities(S, [r.plane for r in two_rich])
    audit = guth_katz_audit(L, S)

    Q = quadruple_energy(P)
    sum_star = incidence_energy(S)
    checks = {
        "four_times_sum_n_star_equals_Q": 4 * sum_star == Q,
        "max_concurrency_at_most_N": audit.concurrency_ok,
        "source_points_injective": audit.source_injective,
        "generic_planes_at_most_N": audit.generic_ok,
        "brute_force_quadruples_match": None,
    }
    if P.N <= bf_cap:
        checks["brute_force_quadruples_match"] = len(enumerate_quadruples(P, bf_cap)) == Q

    buckets = dyadic_buckets(S)
    rich_table, strata = [], []
    for k in buckets:
        try:
            rich = k_rich_planes(L, k, orientation) if P.N >= 2 else []
        except RuntimeError:
            checks["rich_plane_count_bound"] = False
            raise
        for r in rich:
            rich_table.append({"k": k, "plane": _plane(r.plane), "lines": len(r), "k_rich_for": sorted(r.k_rich_for)})
        st = stratify(S, buckets[k], rich, k)
        strata.append(
            {
                "k": k,
                "poor": len(st.poor),
                "rich": len(st.rich),
                "perp_bound_holds": st.perp_bound_holds(P.N),
                "planes": [
                    {"plane": _plane(x.plane), "X": len(x.X), "X_perp": len(x.X_perp), "X_par": len(x.X_par)}
                    for x in st.planes
                ],
            }
        )
    checks["perp_bound_holds"] = all(s["perp_bound_holds"] for s in strata)

    points = []
    for idx in range(len(S)):
        x, y, z = S.sigma(idx)
        points.append(
            {
                "sigma": [format_rational(x), format_rational(y), format_rational(z)],
                "incident": list(S.incident(idx)),
                "n": int(S.n[idx]),
                "n_star": int(S.n_star[idx]),
                "k_perp": int(S.k_perp[idx]),
                "k_par": int(S.k_par[idx]),
            }
        )
    bucket_rows = [b.as_row() for b in audit.buckets]
    report = {
        "N": P.N,
        "lines": len(L),
        "intersection_points": len(S),
        "Q": Q,
        "sum_n": S.total_n(),
        "sum_n_star": sum_star,
        "case_split": None
        if split is None
        else {"case": split.case, "witness_size": split.points.N, "reflected": split.reflected, "classes": split.class_sizes},
        "rich_orientation": orientation,
        "audit": {
            "max_concurrency": audit.max_concurrency,
            "max_vertical_coplanar": audit.max_vertical_coplanar,
            "max_horizontal_coplanar": audit.max_horizontal_coplanar,
            "max_generic_coplanar": audit.max_generic_coplanar,
            "max_coplanar": audit.max_coplanar,
        },
        "buckets": bucket_rows,
        "rich_planes": rich_table,
        "stratification": strata,
        "checks": checks,
        "points": points,
        "note": FLOAT_NOTE,
    }
    status = OK if all(v is not False for v in checks.values()) else IDENTITY_FAILED
    return report, bucket_rows, status


BUCKET_COLUMNS = ["k", "size", "sum_n", "sum_n_star", "size_ratio", "n_star_ratio"]
SWEEP_COLUMNS = [
    "family", "n", "N", "distinct", "distinct_nonzero", "Q", "sum_n_star",
    "identity_ok", "brute_force_ok", "ratio_distinct", "ratio_energy",
]
SET_SWEEP_COLUMNS = ["family", "n", "set_size", "ratio_to_bound"]


def sweep_row(family: str, n: int, P: PointSet, bf_cap: int = DEFAULT_BF_CAP, workers: int = 1) -> dict:
    S = refined_multiplicities(all_intersections(build_line_family(P), workers=workers))
    Q = quadruple_energy(P)
    sum_star = incidence_energy(S)
    R = distance_set(P)
    bf = ""
    if P.N <= bf_cap:
        bf = len(enumerate_quadruples(P, bf_cap)) == Q
    return {
        "family": family,
        "n": n,
        "N": P.N,
        "distinct": len(R),
        "distinct_nonzero": len(R - {Fraction(0)}),
        "Q": Q,
        "sum_n_star": sum_star,
        "identity_ok": 4 * sum_star == Q,
        "brute_force_ok": bf,
        "ratio_distinct": _fmt(distinct_ratio(len(R), P.N)),
        "ratio_energy": _fmt(energy_ratio(Q, P.N)),
    }


def set_sweep_row(family: str, n: int, A: RealSet) -> dict:
    size = expander_size(A, A, "-", "-")
    bound = len(A) ** 2 / (2 * math.log(len(A)))
    return {"family": family, "n": n, "set_size": size, "ratio_to_bound": _fmt(size / bound)}


def _fmt(v: float | None) -> str:
    return "" if v is None else repr(v)


def sumproduct_report(A: RealSet, B: RealSet, table_max: int | None = None) -> tuple[dict, int]:
    if len(A) < 2 or len(B) < 2:
        raise ValueError("sum-product report needs sets with at least two elements")
    bound = len(A) * len(B) / (math.log(len(A)) + math.log(len(B)))
    expanders = {}
    for s1 in "+-":
        for s2 in "+-":
            size = expander_size(A, B, s1, s2)
            expanders[f"{s1}{s2}"] = {"size": size, "ratio_to_bound": size / bound}
    dirs = {}
    for name, X in (("A", A), ("B", B)):
        d = direction_count(X)
        three, four = cross_ratio_sets(X)
        dirs[name] = {
            "size": len(X),
            "direction_count": d.directions,
            "ratio_set_size": d.ratio_set,
            "direction_count_at_least_size_squared": d.directions >= len(X) ** 2,
            "three_point_ratio_set": three,
            "cross_ratio_set": four,
        }
    table_max = table_max or max(len(A), len(B))
    table = [{"n": n, "size": multiplication_table_size(n), "ratio_to_n_squared": multiplication_table_size(n) / n**2}
             for n in range(1, table_max + 1)]
    report = {
        "A": [format_rational(a) for a in A],
        "B": [format_rational(b) for b in B],
        "bound_AB_over_logs": bound,
        "expanders": expanders,
        "sets": dirs,
        "multiplication_table": table,
        "note": FLOAT_NOTE,
    }
    return report, OK
