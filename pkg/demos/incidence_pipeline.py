"""
From point pairs to line intersections
======================================

Build the N^2 lines of a point set, intersect them all, and check that
the refined multiplicities account for the quadruple energy exactly.
"""

from minkdist import all_intersections, build_line_family, quadruple_energy, refined_multiplicities
from minkdist.generators import FamilySpec, generate
from minkdist.incidence import case_split, dyadic_buckets, guth_katz_audit, incidence_energy, k_rich_planes

P = generate(FamilySpec("random_rational", 12, seed=4, max_num=3, max_den=2))
L = build_line_family(P)
S = all_intersections(L)
print(len(L), "lines,", len(S), "intersection points")

refined_multiplicities(S)
print(4 * incidence_energy(S), "==", quadruple_energy(P))

# %% the busiest point
busiest = max(S, key=lambda pt: pt.multiplicity)
print(busiest.sigma, busiest.multiplicity, "lines")

# %% dyadic buckets and the structural audit
for k, idx in dyadic_buckets(S).items():
    print(k, len(idx))
audit = guth_katz_audit(L, S)
print(audit.max_concurrency, audit.max_coplanar, audit.concurrency_ok, audit.generic_ok)

# %% a set with a crowded vertical line has rich planes
R = generate(FamilySpec("rich_abscissa", 16, seed=2))
print(case_split(R).case, [len(r) for r in k_rich_planes(build_line_family(R), 2)])
