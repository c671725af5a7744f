"""
The interquartile range does not respect the order
==================================================

F puts 3/10 on each end of {1, 2, 3, 4}; G is uniform on {1, ..., 5}.
F is below G in the and-order, yet its interquartile range is larger.
The same reversal can be built for any pair of levels.
"""

from fractions import Fraction as Fr

from discdisp import MID, iqnr, leq_disc_and, mad, mdmad
from discdisp.experiments import get_case, iqr_counterexample, preservation_audit

case = get_case("iqr_failure")
F, G = case.F, case.G
print("F below G:", leq_disc_and(F, G).holds)
print("iqnr  F:", iqnr(F), " G:", iqnr(G))
print("mad   F:", mad(F), " G:", mad(G))
print("mdmad F:", mdmad(F), " G:", mdmad(G))

# other levels, both quantile definitions
for a, b in ((Fr(1, 10), Fr(9, 10)), (Fr(1, 3), Fr(2, 3)), (Fr(1, 20), Fr(3, 5))):
    c = iqr_counterexample(a, b)
    print(f"({a}, {b}): G uniform on 1..{c.G.n}, iqnr {iqnr(c.F, a, b)} > {iqnr(c.G, a, b)},"
          f" midpoint {iqnr(c.F, a, b, MID)} > {iqnr(c.G, a, b, MID)}")

# random pairs find reversals too; mad never reverses
for spec in ("iqnr:1/4:3/4", "mad"):
    r = preservation_audit(spec, budget=2000, seed=0)
    print(f"{spec}: {len(r.violations)} reversals in {r.ordered_pairs} ordered pairs")
