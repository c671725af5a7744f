"""
Randomized audits
=================

Measure preservation over random ordered pairs, then a search for three
laws where the and-order fails to chain.  The or-order is transitive,
so the second search comes back empty.
"""

from discdisp import leq_disc_and
from discdisp.experiments import measure_curves, preservation_audit, transitivity_search

for spec in ("sd", "gmd", "mad", "mdmad", "ienr:1/4:3/4"):
    r = preservation_audit(spec, budget=1000, seed=0)
    print(f"{spec:>14}: {len(r.violations)} violations, {r.ordered_pairs} pairs from {r.draws} draws")

res = transitivity_search("and", budget=100_000, seed=0)
F, G, H = res.witness
print(f"\nand-order witness after {res.triples} chained triples:")
for name, d in zip("FGH", res.witness):
    print(f"  {name}:", ", ".join(f"{x}: {p}" for x, p in d.atoms))
print("  F<G", leq_disc_and(F, G).holds, " G<H", leq_disc_and(G, H).holds, " F<H", leq_disc_and(F, H).holds)

print("or-order:", "witness" if transitivity_search("or", budget=5000, seed=0) else "none in 5000 triples")

# iqnr on geometric laws is the one curve that does not fall steadily
t = measure_curves("geometric", specs="iqnr:1/4:3/4")
iq = t.column("iqnr:1/4:3/4")
rises = [(float(t.params[i]), int(iq[i - 1]), int(iq[i])) for i in range(1, len(iq)) if iq[i] > iq[i - 1]]
print("\niqnr rises at", ", ".join(f"pi={p}: {a} -> {b}" for p, a, b in rises))
