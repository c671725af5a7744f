"""Seeded randomized property suites shared by the property and acceptance tests.

Each suite keeps drawing until it has ``N`` accepted instances (inputs that
meet the premise) and records every instance where the conclusion fails.
"""

from dataclasses import dataclass, field
from functools import lru_cache

from discdisp import (
    affine,
    gmd,
    ienr,
    leq_dil,
    leq_disc_and,
    leq_disc_lattice,
    leq_disc_or,
    leq_disp,
    leq_st,
    leq_weak_disp,
    mad,
    mdmad,
    shift,
    shift_equivalence,
    variance,
)
from discdisp.experiments import HALF_GRID, LATTICE, nested_pair, random_dist, transitivity_search
from discdisp.experiments.audit import random_pair
from discdisp.experiments.sampling import draw_rng
from discdisp.orders import condition_i, condition_i_via_density, is_lattice, support_measure_check
from discdisp.relations import condition_one_holds, rel_and, rel_and_via_nn, rel_or, rel_or_via_nn

N = 1000
MAX_DRAWS = 200 * N


@dataclass
class SuiteResult:
    name: str
    accepted: int = 0
    violations: list = field(default_factory=list)
    note: str = ""

    @property
    def ok(self) -> bool:
        return self.accepted >= N and not self.violations


def _ordered_pairs(seed, config=HALF_GRID):
    """``(F, G)`` with ``F ⪯∧ G`` drawn from the audit pair generator."""
    for i in range(MAX_DRAWS):
        f, g = random_pair(config, draw_rng(seed, i))
        if leq_disc_and(f, g):
            yield f, g


def _run(name, source, premise, conclusion, note=""):
    res = SuiteResult(name, note=note)
    for item in source:
        if not premise(*item):
            continue
        res.accepted += 1
        if not conclusion(*item):
            res.violations.append(item)
        if res.accepted >= N:
            break
    return res


def _always(*_):
    return True


def reflexivity():
    dists = ((random_dist(HALF_GRID, draw_rng("refl", i)),) for i in range(MAX_DRAWS))
    return _run("reflexivity of both orders", dists, _always,
                lambda d: leq_disc_and(d, d).holds and leq_disc_or(d, d).holds)


def and_implies_weak():
    return _run("and implies weak dispersive", _ordered_pairs("weak"), _always,
                lambda f, g: leq_weak_disp(f, g).holds)


def and_implies_dil():
    return _run("and implies dilation", _ordered_pairs("dil"), _always,
                lambda f, g: leq_dil(f, g).holds)


def measure_monotonicity():
    measures = (variance, gmd, mad, mdmad, ienr)

    def monotone(f, g):
        return all(m(f) <= m(g) for m in measures)

    return _run("sd/gmd/mad/mdmad/ienr monotone over and", _ordered_pairs("measures"), _always,
                monotone, note="sd compared through the exact variance")


def nested_equivalence():
    pairs = (nested_pair(HALF_GRID, draw_rng("nested", i)) for i in range(MAX_DRAWS))
    holds = []

    def same(f, g):
        a = leq_disc_and(f, g).holds
        holds.append(a)
        return a == leq_disp(f, g).holds and (not leq_disc_or(f, g).holds or a)

    res = _run("nested levels: and equals disp, or implies and", pairs, _always, same)
    res.note = f"{sum(holds)} of the accepted pairs are ordered"
    return res


def or_transitivity():
    r = transitivity_search("or", budget=N, seed="or-chain")
    res = SuiteResult("or transitive on chained triples", r.triples,
                      [r.witness] if r.witness else [], f"{r.rounds} pool rounds")
    return res


def lattice_equivalence():
    def pairs():
        for i in range(MAX_DRAWS):
            yield random_pair(LATTICE, draw_rng("lattice", i))

    def premise(f, g):
        return is_lattice(f) is not None and is_lattice(g) is not None

    holds = []

    def agree(f, g):
        a, o, lat = leq_disc_and(f, g).holds, leq_disc_or(f, g).holds, leq_disc_lattice(f, g).holds
        holds.append(a)
        return a == o == lat

    res = _run("lattice pairs: and, or and the lattice test agree", pairs(), premise, agree)
    res.note = f"{sum(holds)} of the accepted pairs are ordered"
    return res


def shift_classes():
    def pairs():
        for i in range(MAX_DRAWS):
            rng = draw_rng("shift", i)
            f = random_dist(HALF_GRID, rng)
            r = rng.random()
            if r < 0.4:
                yield f, shift(f, rng.randint(-6, 6) * HALF_GRID.grid_step)
            elif r < 0.6:
                yield f, affine(f, rng.choice((2, 3)), rng.randint(-3, 3))
            else:
                yield random_pair(HALF_GRID, rng)

    def agree(f, g):
        mutual = leq_disc_and(f, g).holds and leq_disc_and(g, f).holds
        return mutual == (shift_equivalence(f, g) is not None)

    return _run("shift equivalence iff mutual and", pairs(), _always, agree)


def nn_cross_check():
    def pairs():
        for i in range(MAX_DRAWS):
            rng = draw_rng("nn", i)
            yield random_pair(HALF_GRID, rng)

    def agree(f, g):
        return rel_and_via_nn(f, g) == rel_and(f, g) and rel_or_via_nn(f, g) == rel_or(f, g)

    return _run("nearest-neighbour form of the relations", pairs(), condition_one_holds, agree)


def density_cross_check():
    pairs = (random_pair(HALF_GRID, draw_rng("density", i)) for i in range(MAX_DRAWS))
    return _run("density form of the jump condition", pairs, _always,
                lambda f, g: condition_i_via_density(f, g) == (condition_i(f, g) is None))


def min_support_st():
    return _run("and with min F <= min G implies F <=st G", _ordered_pairs("minsupp"),
                lambda f, g: f.support[0] <= g.support[0],
                lambda f, g: leq_st(f, g).holds)


def max_support_st():
    return _run("and with max F >= max G implies G <=st F", _ordered_pairs("maxsupp"),
                lambda f, g: f.support[-1] >= g.support[-1],
                lambda f, g: leq_st(g, f).holds)


def span_check():
    return _run("support span grows unless shifted", _ordered_pairs("span"), _always,
                support_measure_check)


SUITES = {
    "reflexivity": reflexivity,
    "and_weak": and_implies_weak,
    "and_dil": and_implies_dil,
    "measures": measure_monotonicity,
    "nested": nested_equivalence,
    "or_transitive": or_transitivity,
    "lattice": lattice_equivalence,
    "shift": shift_classes,
    "nn": nn_cross_check,
    "density": density_cross_check,
    "min_support": min_support_st,
    "max_support": max_support_st,
    "span": span_check,
}


@lru_cache(maxsize=None)
def run_suite(key: str) -> SuiteResult:
    return SUITES[key]()
