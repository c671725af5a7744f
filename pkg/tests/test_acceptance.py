"""Acceptance criteria, one test per criterion.

Each test prints a PASS/FAIL line (also collected in the terminal summary)
and then asserts, so a failing criterion shows up in both places.
Run just this file with ``pytest tests/test_acceptance.py -v``.
"""

import time
from fractions import Fraction as Fr

from discdisp import (
    LEFT,
    MID,
    MeasureSpec,
    from_pmf,
    geometric,
    gmd,
    iqnr,
    leq_disc_and,
    leq_disc_or,
    leq_disp,
    mad,
    rel_and,
    rel_join,
    rel_or,
    sd,
    uniform_range,
    uniform_set,
)
from discdisp.experiments import (
    geom_region_theoretical,
    geom_sweep,
    get_case,
    measure_curves,
    preservation_audit,
    table1,
    table2,
    transitivity_search,
)
from discdisp.experiments.curves import is_monotone, is_strictly_decreasing

from suites import N, SUITES, run_suite


def _close(value, target, tol):
    return abs(float(value) - target) <= tol


def _dataset_row(pair):
    p, q = pair
    return {
        "sd": (sd(p, unbiased=True), sd(q, unbiased=True)),
        "mad": (mad(p), mad(q)),
        "gmd": (gmd(p, unbiased=True), gmd(q, unbiased=True)),
        "iqnr": (iqnr(p), iqnr(q)),
    }


def _check_dataset(number, loader, expected, report):
    start = time.perf_counter()
    row = _dataset_row(loader())
    elapsed = time.perf_counter() - start
    misses = []
    for name, targets in expected.items():
        for value, target in zip(row[name], targets):
            tol = 0.05 if target == 7.8 else 0.005
            if not _close(value, target, tol):
                misses.append(f"{name}={float(value):.4f} (want {target})")
    ok = not misses and elapsed < 1.0
    shown = ", ".join(f"{k}=({float(a):.4f}, {float(b):.4f})" for k, (a, b) in row.items())
    detail = f"{shown}; {elapsed * 1000:.1f} ms" + (f"; misses: {misses}" if misses else "")
    assert report(number, ok, detail)


def test_criterion_1_table1_measures(report):
    _check_dataset(1, table1, {"sd": (1.29, 7.8), "mad": (1.03, 4.45),
                               "gmd": (1.33, 5.98), "iqnr": (2, 5)}, report)


def test_criterion_2_table2_measures(report):
    _check_dataset(2, table2, {"sd": (0.76, 2.73), "mad": (0.55, 1.76),
                               "gmd": (0.61, 2.18), "iqnr": (1, 1)}, report)


def test_criterion_3_dataset_verdicts(report):
    parts, ok = [], True
    for name, loader in (("table1", table1), ("table2", table2)):
        p, q = loader()
        got = (leq_disp(p, q).holds, leq_disp(q, p).holds, leq_disc_and(p, q).holds, leq_disc_or(p, q).holds)
        exact = p.exact and q.exact
        ok &= got == (False, False, True, True) and exact
        parts.append(f"{name}: disp(p,q)={got[0]} disp(q,p)={got[1]} and={got[2]} or={got[3]} exact={exact}")
    assert report(3, ok, "; ".join(parts))


def test_criterion_4_two_uniforms(report):
    u2, u5, u4 = uniform_range(2), uniform_range(5), uniform_set([1, 2, 3, 4])
    got = (leq_disp(u2, u5).holds, leq_disc_and(u2, u5).holds, leq_disp(u2, u4).holds)
    ok = got == (False, True, True)
    assert report(4, ok, f"disp(U2,U5)={got[0]}, and(U2,U5)={got[1]}, disp(U2,U4)={got[2]}")


def test_criterion_5_relation_sets(report):
    def on_integers(weights, denom):
        return from_pmf([(i + 1, Fr(w, denom)) for i, w in enumerate(weights)])

    checks = {
        "join a": (rel_join(uniform_range(2), uniform_range(5)).sorted(),
                   [(1, 1), (1, 2), (1, 3), (2, 3), (2, 4), (2, 5)]),
        "join b": (rel_join(on_integers((1, 3), 4), on_integers((1, 2, 5), 8)).sorted(),
                   [(1, 1), (1, 2), (2, 2), (2, 3)]),
    }
    F, G = on_integers((1, 1, 1), 3), on_integers((4, 1, 1, 2, 2, 1, 1, 4), 16)
    checks["and"] = (rel_and(F, G).sorted(), [(2, 3), (2, 4), (3, 6), (3, 7)])
    checks["or"] = (rel_or(F, G).sorted(), sorted([(2, 2), (2, 3), (2, 4), (3, 4), (2, 5), (3, 5),
                                                   (2, 6), (3, 6), (3, 7), (3, 8)]))
    bad = [k for k, (got, want) in checks.items() if got != want]
    assert report(5, not bad, f"{len(checks) - len(bad)}/{len(checks)} sets match exactly"
                  + (f"; mismatched: {bad}" if bad else ""))


def test_criterion_6_iqr_failure(report):
    case = get_case("iqr_failure")
    F, G = case.F, case.G
    pair_ok = leq_disc_and(F, G).holds and iqnr(F) == 3 and iqnr(G) == 2
    audits = {v: preservation_audit(MeasureSpec("iqnr", Fr(1, 4), Fr(3, 4), v), budget=10_000, seed=0)
              for v in (LEFT, MID)}
    ok = pair_ok and all(r.violations and r.ordered_pairs <= 10_000 for r in audits.values())
    detail = (f"catalog pair: and={leq_disc_and(F, G).holds}, iqnr(F)={iqnr(F)}, iqnr(G)={iqnr(G)}; "
              + "; ".join(f"random audit {v}: {len(r.violations)} violations in {r.ordered_pairs} ordered pairs"
                          for v, r in audits.items()))
    assert report(6, ok, detail)


def test_criterion_7_geometric_region(report):
    tail = Fr(1, 10**9)
    inside = geom_region_theoretical(0.15, 0.12)
    inside_num = leq_disc_and(geometric(Fr(3, 20), tail), geometric(Fr(3, 25), tail)).holds
    outside_num = leq_disc_and(geometric(Fr(9, 10), tail), geometric(Fr(18, 25), tail)).holds
    start = time.perf_counter()
    grid = geom_sweep(Fr(1, 20), tail)
    elapsed = time.perf_counter() - start
    meta = grid.metadata()
    ok = inside and inside_num and not outside_num and meta["violations"] == 0 and elapsed < 300
    detail = (f"theory(0.15,0.12)={inside}, numeric={inside_num}; numeric(0.9,0.72)={outside_num}; "
              f"step 0.05 exact sweep: {meta['holds']} holds, {meta['fails']} fails, "
              f"{meta['violations']} violations, {elapsed:.1f} s")
    assert report(7, ok, detail)


def test_criterion_8_property_suites(report):
    results = [run_suite(k) for k in SUITES]
    ok = all(r.ok for r in results)
    detail = "; ".join(f"{r.name}: {r.accepted}/{len(r.violations)}" for r in results)
    assert report(8, ok, f"{len(results)} suites, accepted/violations (need >= {N}/0): {detail}")


def test_criterion_9_transitivity_witness(report):
    res = transitivity_search("and", budget=100_000, seed=0)
    if res.witness is None:
        assert report(9, False, f"no witness in {res.triples} chained triples")
    F, G, H = res.witness
    recheck = (leq_disc_and(F, G).holds, leq_disc_and(G, H).holds, leq_disc_and(F, H).holds)
    ok = recheck == (True, True, False) and res.triples <= 100_000
    assert report(9, ok, f"witness after {res.triples} chained triples; re-check "
                         f"F<G={recheck[0]}, G<H={recheck[1]}, F<H={recheck[2]}")


def test_criterion_10_curve_shapes(report):
    uni = measure_curves("uniform")
    mad_eq = uni.column("mad") == uni.column("mdmad")
    iq_int = all(v.denominator == 1 for v in uni.column("iqnr:1/4:3/4"))
    geo = measure_curves("geometric")
    decreasing = {c: is_strictly_decreasing(geo.column(c))
                  for c in ("sd", "gmd", "mad", "mdmad", "ienr:1/4:3/4")}
    iq_mono = is_monotone(geo.column("iqnr:1/4:3/4"))
    ok = mad_eq and iq_int and all(decreasing.values()) and not iq_mono
    detail = (f"U[2..100]: mad==mdmad {mad_eq}, iqnr integer {iq_int}; geometric 0.01..0.99: "
              f"strictly decreasing {sorted(k for k, v in decreasing.items() if v)}, iqnr monotone {iq_mono}")
    assert report(10, ok, detail)
