"""
Jump intervals and the two discrete orders
==========================================

Two uniform laws on {1, 2} and {1, ..., 5}: the cdf of the first has a
level (1/2) the second never takes, so the classical dispersive order
cannot hold.  The discrete orders look at overlapping jumps instead.
"""

from fractions import Fraction as Fr

from discdisp import from_pmf, leq_disc_and, leq_disc_or, leq_disp, nn_set, rel_and, rel_join, rel_or, uniform_range

F, G = uniform_range(2), uniform_range(5)
print("levels of F:", [str(x) for x in F.levels], " levels of G:", [str(x) for x in G.levels])
print("overlapping jumps:", rel_join(F, G).sorted())

v = leq_disp(F, G)
print("classical order:", v.holds, "-", v.witness.detail, v.witness.point)
print("and-order:", leq_disc_and(F, G).holds, " or-order:", leq_disc_or(F, G).holds)

# a richer pair: three equal jumps against eight uneven ones
F = from_pmf([(k, Fr(1, 3)) for k in (1, 2, 3)])
G = from_pmf([(k + 1, Fr(w, 16)) for k, w in enumerate((4, 1, 1, 2, 2, 1, 1, 4))])
print()
print("and-related:", rel_and(F, G).sorted())
print("or-related: ", rel_or(F, G).sorted())
# the nearest levels of G around F's first interior level 1/3
print("neighbours of 1/3:", [str(x) for x in nn_set(F, G, 2)])

# Bernoulli(1/2) against a three-point law: ordered for "and" but not for "or"
x = from_pmf([(0, Fr(1, 2)), (1, Fr(1, 2))])
y = from_pmf([(0, Fr(1, 2)), (1, Fr(1, 4)), (Fr(3, 2), Fr(1, 4))])
w = leq_disc_or(x, y).witness
print()
print("and:", leq_disc_and(x, y).holds, " or:", leq_disc_or(x, y).holds,
      f"(gap {w.lhs} of F exceeds gap {w.rhs} of G at {w.indices})")
