"""
Geometric laws: where does the and-order hold?
==============================================

Sweep pairs of success probabilities, compare the numeric verdict with
the closed-form sufficient region, and write a CSV plus an SVG heatmap.
Run with a finer step (e.g. 0.01) for the full picture.
"""

import sys
from fractions import Fraction as Fr

from discdisp import geometric, leq_disc_and
from discdisp.experiments import geom_region_theoretical, geom_sweep

step = Fr(sys.argv[1]) if len(sys.argv) > 1 else Fr(1, 20)

for pf, pg in ((Fr(3, 20), Fr(3, 25)), (Fr(9, 10), Fr(18, 25))):
    v = leq_disc_and(geometric(pf), geometric(pg))
    print(f"pi_F={float(pf)}, pi_G={float(pg)}: region {geom_region_theoretical(pf, pg)}, numeric {v.holds}")

grid = geom_sweep(step, workers=2)
meta = grid.metadata()
print(f"{meta['cells']} cells: {meta['holds']} hold, {meta['fails']} fail, {meta['skipped']} skipped")
print(f"inside the region but failing: {meta['violations']}")
# holds outside the region are genuine here: every verdict is exact
print(f"holding outside the region: {meta['holds_outside_theory']}")

with open("geometric_sweep.csv", "w") as fh:
    fh.write(grid.to_csv())
with open("geometric_sweep.svg", "w") as fh:
    fh.write(grid.to_svg())
print("wrote geometric_sweep.csv and geometric_sweep.svg")
