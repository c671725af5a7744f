"""Worked examples and counterexamples with their expected outcomes.

Cases verify themselves when the catalog is built, so the catalog doubles
as a regression anchor for the order and measure implementations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from ..dist import DiscreteDist, abs_diff_dist, as_fraction, binomial, from_pmf, shift, uniform_range, uniform_set
from ..measures import LEFT, MID, iqnr, mdmad, median
from ..orders import leq_disc_and, leq_disc_or, leq_disp, leq_st
from ..errors import BadParam
from ..relations import rel_and, rel_join, rel_or
from .data import table1, table2

__all__ = ["Check", "CounterexampleCase", "CatalogMismatch", "catalog", "get_case",
           "iqr_counterexample", "abs_diff_to"]

Fr = Fraction


class CatalogMismatch(AssertionError):
    pass


@dataclass(frozen=True)
class Check:
    label: str
    compute: Callable[[], object]
    expected: object

    def run(self):
        actual = self.compute()
        if hasattr(actual, "holds"):
            actual = actual.holds
        return actual, actual == self.expected


@dataclass(frozen=True)
class CounterexampleCase:
    name: str
    description: str
    F: DiscreteDist
    G: DiscreteDist
    H: Optional[DiscreteDist] = None
    checks: tuple = field(default=(), repr=False)

    def verify(self) -> list:
        """List of ``(label, expected, actual)`` for every failing check."""
        bad = []
        for c in self.checks:
            actual, ok = c.run()
            if not ok:
                bad.append((c.label, c.expected, actual))
        return bad

    def results(self) -> list:
        return [(c.label, c.expected, *c.run()) for c in self.checks]


def _pairs(rel) -> set:
    return set(rel.pairs)


def _two_uniforms() -> list:
    x, y, y_tilde = uniform_set([1, 2]), uniform_range(5), uniform_range(4)
    return [
        CounterexampleCase(
            "uniform_2_vs_5", "U{1,2} against U{1..5}: ranges not nested", x, y,
            checks=(
                Check("leq_disp(F,G)", lambda: leq_disp(x, y), False),
                Check("leq_disp(G,F)", lambda: leq_disp(y, x), False),
                Check("leq_disc_and(F,G)", lambda: leq_disc_and(x, y), True),
                Check("leq_disc_or(F,G)", lambda: leq_disc_or(x, y), True),
                Check("rel_join(F,G)", lambda: _pairs(rel_join(x, y)),
                      {(1, 1), (1, 2), (1, 3), (2, 3), (2, 4), (2, 5)}),
            ),
        ),
        CounterexampleCase(
            "uniform_2_vs_4", "U{1,2} against U{1..4}: ranges nested", x, y_tilde,
            checks=(
                Check("leq_disp(F,G)", lambda: leq_disp(x, y_tilde), True),
                Check("leq_disc_and(F,G)", lambda: leq_disc_and(x, y_tilde), True),
            ),
        ),
    ]


def _and_not_or() -> CounterexampleCase:
    x = binomial(1, Fr(1, 2))
    y = from_pmf([(0, Fr(1, 2)), (1, Fr(1, 4)), (Fr(3, 2), Fr(1, 4))])
    return CounterexampleCase(
        "and_not_or", "Bin(1,1/2) against {0:1/2, 1:1/4, 3/2:1/4}: the ∧ order "
        "holds, the ∨ order does not, although the ranges are nested", x, y,
        checks=(
            Check("leq_disc_and(F,G)", lambda: leq_disc_and(x, y), True),
            Check("leq_disc_or(F,G)", lambda: leq_disc_or(x, y), False),
            Check("leq_disp(F,G)", lambda: leq_disp(x, y), True),
        ),
    )


def _iqr_failure() -> CounterexampleCase:
    f = from_pmf([(1, Fr(3, 10)), (2, Fr(1, 5)), (3, Fr(1, 5)), (4, Fr(3, 10))])
    g = uniform_range(5)
    q1, q3 = Fr(1, 4), Fr(3, 4)
    return CounterexampleCase(
        "iqr_failure", "ordered lattice pair whose interquartile range is reversed", f, g,
        checks=(
            Check("leq_disc_and(F,G)", lambda: leq_disc_and(f, g), True),
            Check("leq_disc_or(F,G)", lambda: leq_disc_or(f, g), True),
            Check("iqnr(F,1/4,3/4)", lambda: iqnr(f, q1, q3), 3),
            Check("iqnr(G,1/4,3/4)", lambda: iqnr(g, q1, q3), 2),
            Check("iqnr_mid(F,1/4,3/4)", lambda: iqnr(f, q1, q3, MID), 3),
            Check("iqnr_mid(G,1/4,3/4)", lambda: iqnr(g, q1, q3, MID), 2),
        ),
    )


def _mdmad_pair() -> CounterexampleCase:
    x = from_pmf([(0, Fr(1, 2)), (1, Fr(1, 4)), (2, Fr(1, 4))])
    y = from_pmf([(0, Fr(3, 8)), (1, Fr(1, 4)), (2, Fr(1, 4)), (3, Fr(1, 8))])

    def abs_dev_from_median(d):
        return abs_diff_to(d, median(d, LEFT))

    return CounterexampleCase(
        "mdmad_pair", "ordered pair where |X - med X| is not stochastically smaller "
        "than |Y - med Y|, yet mdmad is still monotone", x, y,
        checks=(
            Check("leq_disc_and(F,G)", lambda: leq_disc_and(x, y), True),
            Check("mdmad(F)", lambda: mdmad(x), Fr(3, 4)),
            Check("mdmad(G)", lambda: mdmad(y), Fr(7, 8)),
            Check("leq_st(|X-medX|,|Y-medY|)",
                  lambda: leq_st(abs_dev_from_median(x), abs_dev_from_median(y)), False),
        ),
    )


def abs_diff_to(d: DiscreteDist, centre) -> DiscreteDist:
    """Law of ``|X - centre|``."""
    return from_pmf([(abs(x - centre), p) for x, p in d.atoms], label=f"|X-{centre}|")


def _relation_examples() -> list:
    f = from_pmf([(1, Fr(1, 4)), (2, Fr(3, 4))])
    g = from_pmf([(1, Fr(1, 8)), (2, Fr(1, 4)), (3, Fr(5, 8))])
    f3 = from_pmf([(j, Fr(1, 3)) for j in (1, 2, 3)])
    g8 = from_pmf([(j + 1, Fr(w, 16)) for j, w in enumerate((4, 1, 1, 2, 2, 1, 1, 4))])
    return [
        CounterexampleCase(
            "jumps_1_4", "two-point against three-point lattice law", f, g,
            checks=(
                Check("rel_join(F,G)", lambda: _pairs(rel_join(f, g)),
                      {(1, 1), (1, 2), (2, 2), (2, 3)}),
                Check("leq_disc_and(F,G)", lambda: leq_disc_and(f, g), True),
                Check("leq_disc_or(F,G)", lambda: leq_disc_or(f, g), True),
            ),
        ),
        CounterexampleCase(
            "thirds_vs_sixteenths", "interval relations of a three-point against an "
            "eight-point law", f3, g8,
            checks=(
                Check("rel_and(F,G)", lambda: _pairs(rel_and(f3, g8)),
                      {(2, 3), (2, 4), (3, 6), (3, 7)}),
                Check("rel_or(F,G)", lambda: _pairs(rel_or(f3, g8)),
                      {(2, 2), (2, 3), (2, 4), (3, 4), (2, 5), (3, 5), (2, 6),
                       (3, 6), (3, 7), (3, 8)}),
            ),
        ),
    ]


def _datasets() -> list:
    cases = []
    for name, (p, q) in (("table1", table1()), ("table2", table2())):
        cases.append(CounterexampleCase(
            name, f"eel parasite counts, {p.label} against {q.label}", p, q,
            checks=(
                Check("leq_disp(F,G)", lambda p=p, q=q: leq_disp(p, q), False),
                Check("leq_disp(G,F)", lambda p=p, q=q: leq_disp(q, p), False),
                Check("leq_disc_and(F,G)", lambda p=p, q=q: leq_disc_and(p, q), True),
                Check("leq_disc_or(F,G)", lambda p=p, q=q: leq_disc_or(p, q), True),
            ),
        ))
    return cases


def iqr_counterexample(alpha, beta, m_max: int = 10_000) -> CounterexampleCase:
    """Lattice pair with ``F ⪯∧ G`` but ``iqnr(F) > iqnr(G)`` at ``(alpha, beta)``.

    ``G`` is uniform on ``{1..m}`` and ``F`` lives on ``{1..k}`` with every
    jump at least ``1/m``, so condition (i) holds on all pairs and the common
    unit spacing makes condition (ii) trivial.  ``m`` is chosen so that
    ``ceil(beta m) - ceil(alpha m) < (beta - alpha) m``; the slack lets ``F``
    put ``alpha``-ish mass on its first atom and more than ``1 - beta`` on its
    last, so its quantiles sit at the two ends.  All quantiles involved are
    unique, so the reversal holds for either quantile variant.
    At ``(1/4, 3/4)`` this reproduces the ``iqr_failure`` pair.
    """
    a, b = as_fraction(alpha), as_fraction(beta)
    if not 0 < a < b < 1:
        raise BadParam(f"need 0 < alpha < beta < 1, got {alpha}, {beta}")
    lo = max(1 / a, 1 / (1 - b))
    for m in range(int(lo) + 1, m_max + 1):
        am, bm = a * m, b * m
        if am.denominator == 1 or bm.denominator == 1:
            continue
        gap = -(-bm.numerator // bm.denominator) - (-(-am.numerator // am.denominator))
        slack = (b - a) * m - gap
        if slack <= 0:
            continue
        p1 = a + slack / (2 * m)
        pk = 1 - p1 - Fr(gap, m)
        probs = [p1] + [Fr(1, m)] * gap + [pk]
        f = from_pmf([(j + 1, p) for j, p in enumerate(probs)])
        g = uniform_range(m)
        expected_f, expected_g = len(probs) - 1, gap
        return CounterexampleCase(
            f"iqr_failure[{a},{b}]", f"iqnr reversal at alpha={a}, beta={b}", f, g,
            checks=(
                Check("leq_disc_and(F,G)", lambda: leq_disc_and(f, g), True),
                Check("iqnr(F)", lambda: iqnr(f, a, b), expected_f),
                Check("iqnr(G)", lambda: iqnr(g, a, b), expected_g),
                Check("iqnr_mid(F)", lambda: iqnr(f, a, b, MID), expected_f),
                Check("iqnr_mid(G)", lambda: iqnr(g, a, b, MID), expected_g),
            ),
        )
    raise BadParam(f"no construction with m <= {m_max} for alpha={a}, beta={b}")


def _shift_pair() -> CounterexampleCase:
    f = from_pmf([(0, Fr(1, 5)), (Fr(1, 2), Fr(1, 2)), (3, Fr(3, 10))])
    g = shift(f, 3)
    return CounterexampleCase(
        "shift_pair", "a law and its shift are ordered both ways", f, g,
        checks=(
            Check("leq_disc_and(F,G)", lambda: leq_disc_and(f, g), True),
            Check("leq_disc_and(G,F)", lambda: leq_disc_and(g, f), True),
            Check("leq_disc_or(G,F)", lambda: leq_disc_or(g, f), True),
            Check("abs_diff equal", lambda: abs_diff_dist(f) == abs_diff_dist(g), True),
        ),
    )


def catalog(verify: bool = True) -> list:
    """All catalog cases; raises :class:`CatalogMismatch` if any fails."""
    cases = [
        *_two_uniforms(),
        _and_not_or(),
        _iqr_failure(),
        _mdmad_pair(),
        *_relation_examples(),
        *_datasets(),
        _shift_pair(),
    ]
    if verify:
        problems = [(c.name, bad) for c in cases for bad in c.verify()]
        if problems:
            lines = [f"{name}: {label} expected {exp!r}, got {act!r}"
                     for name, (label, exp, act) in problems]
            raise CatalogMismatch("catalog self-check failed:\n" + "\n".join(lines))
    return cases


def get_case(name: str) -> CounterexampleCase:
    for case in catalog():
        if case.name == name:
            return case
    raise KeyError(name)
