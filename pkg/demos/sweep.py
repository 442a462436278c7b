"""
Grid sweep
==========

Distinct areas and energy as grids grow, with the log-normalized ratios
computed for display.
"""

from minkdist.generators import FamilySpec, generate
from minkdist.reports import sweep_row

for n in range(2, 9):
    row = sweep_row("grid", n, generate(FamilySpec("grid", n)))
    print(row["N"], row["distinct"], row["Q"], row["identity_ok"], row["ratio_distinct"])

# the same table as CSV:  minkdist sweep --family grid --sizes 2..8
