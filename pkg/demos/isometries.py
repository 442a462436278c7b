"""
Area-preserving maps and their lines
====================================

Maps (x1, x2) -> (x1 z + a, x2 / z + b) with z > 0 keep rectangular
areas.  The maps sending p to s form a line in 3-space.
"""

from fractions import Fraction

from minkdist import Isometry, apply, compose, inverse, isometry_from_quadruple
from minkdist.core import PlanePoint
from minkdist.isometry import from_line_coordinates, line_from_pair
from minkdist.minkowski import rectangular_area

phi = Isometry(1, -2, Fraction(3, 2))
p, q = PlanePoint.of(0, 1), PlanePoint.of(2, 5)
print(rectangular_area(p, q), rectangular_area(apply(phi, p), apply(phi, q)))

# %% group structure
psi = Isometry(Fraction(1, 3), 4, 2)
print(compose(phi, psi), inverse(phi), compose(phi, inverse(phi)))

# %% recovering the map from two pairs with equal area
s, t = apply(phi, p), apply(phi, q)
print(isometry_from_quadruple(p, q, s, t))
print(isometry_from_quadruple(p, q, t, s))  # same map, flagged as swapped

# %% every point of the line l_ps is a map taking p to s
line = line_from_pair(p, s)
for z in (Fraction(1, 2), 1, 3):
    m = from_line_coordinates(line.point_at(z))
    print(z, m, apply(m, p) == s)
