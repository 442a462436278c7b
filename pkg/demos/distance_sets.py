"""
Rectangular areas of planar point sets
======================================

Pairs of points span axis-parallel rectangles.  We look at how many
distinct signed areas a set produces, and why a set on one axis line
produces none.
"""

from minkdist import PointSet, area_spectrum, distance_set, quadruple_energy
from minkdist.generators import grid, null_line
from minkdist.core import format_rational
from minkdist.minkowski import cauchy_schwarz_report

# %% a 3x3 grid
P = grid(range(1, 4), range(1, 4))
R = distance_set(P)
print(len(R), "distinct areas:", [format_rational(r) for r in sorted(R)])

# the spectrum counts ordered pairs per area; the counts add up to N^2
spec = area_spectrum(P)
top = sorted(spec.counts.items(), key=lambda kv: -kv[1])[:3]
print([(format_rational(a), c) for a, c in top], spec.total(), P.N**2)

# %% quadruple energy, and the Cauchy-Schwarz link back to |R|
print("Q =", quadruple_energy(P))
cs = cauchy_schwarz_report(P)
print(f"{cs.lhs} <= {cs.rhs}: {cs.holds}")

# %% everything on one vertical line: every area is zero
Z = null_line(6, seed=1)
print(distance_set(Z), quadruple_energy(Z))

# hand-written sets work too; literals stay exact
H = PointSet.of([("1/2", 0), (2, "3/4"), (-1, 5)])
print([format_rational(r) for r in sorted(distance_set(H))])
