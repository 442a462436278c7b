"""
Products of differences
=======================

Sizes of (A +- B)(A +- B), direction counts of A x A, cross-ratio sets
and the multiplication table.
"""

from minkdist import RealSet, expander_size
from minkdist.generators import progression
from minkdist.sumproduct import cross_ratio_sets, direction_count, multiplication_table_size, set_op

A = progression(6)
B = RealSet.of([1, 2, 4, 8, 16, 32])
for s1 in "+-":
    for s2 in "+-":
        print(s1 + s2, expander_size(A, B, s1, s2))

print(len(set_op(A, A, "sum")), len(set_op(B, B, "product")))

# %% directions spanned by a grid
for n in range(2, 7):
    d = direction_count(progression(n, start=0))
    print(n, d.directions, n * n)

# %% cross ratios and the multiplication table
print(cross_ratio_sets(RealSet.of([0, 1, 3, 7, 12])))
print([multiplication_table_size(n) for n in range(1, 13)])
