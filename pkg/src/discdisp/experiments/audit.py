"""Randomized falsification harnesses.

Every draw uses its own generator derived from ``(seed, index)``, so results
depend only on the seed and budget.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from ..dist import DiscreteDist, affine, from_pmf, variance
from ..errors import BadParam
from ..io import dist_to_json, num_to_json
from ..measures import MeasureSpec
from ..orders import leq_disc_and, leq_disc_or
from .catalog import catalog, iqr_counterexample
from .sampling import HALF_GRID, RandomConfig, draw_rng, random_dist

__all__ = [
    "ORDER_CHECKS",
    "random_pair",
    "spread",
    "insert_atom",
    "Violation",
    "AuditResult",
    "preservation_audit",
    "TransitivityResult",
    "transitivity_search",
]

ORDER_CHECKS = {"and": leq_disc_and, "or": leq_disc_or}


def _order_check(order: str):
    try:
        return ORDER_CHECKS[order]
    except KeyError:
        raise BadParam(f"order must be one of {sorted(ORDER_CHECKS)}, got {order!r}") from None


def spread(F: DiscreteDist, config: RandomConfig, rng: random.Random) -> DiscreteDist:
    """A randomly more spread-out relative of ``F``.

    Scales ``F`` by a factor of at least one, then possibly splits one atom
    into two neighbouring atoms.  The result is often, not always, above
    ``F`` in the discrete orders.
    """
    step = Fraction(config.grid_step)
    g = affine(F, rng.choice((1, 1, Fraction(3, 2), 2, 3)), step * rng.randint(-2, 2))
    if rng.random() < 2 / 3:
        atoms = list(g.atoms)
        j = rng.randrange(len(atoms))
        y, q = atoms[j]
        w = rng.choice((Fraction(1, 3), Fraction(1, 2), Fraction(2, 3)))
        h = step * rng.randint(1, 2)
        taken = set(g.support)
        for z in (y + h, y - h):
            if z not in taken and (j + 1 == len(atoms) or z < atoms[j + 1][0]) and (j == 0 or z > atoms[j - 1][0]):
                atoms[j] = (y, w * q)
                atoms.append((z, (1 - w) * q))
                g = from_pmf(atoms)
                break
    return g


def insert_atom(F: DiscreteDist, config: RandomConfig, rng: random.Random) -> DiscreteDist:
    """Move part of some atoms' mass onto a new atom.

    The new atom goes in at a random position, at the distance of the
    neighbouring gap, and every atom to its right moves outward by that
    distance: existing gaps are kept and one of them is repeated.
    """
    atoms = list(F.atoms)
    k = len(atoms)
    j = rng.randint(0, k)
    if j == 0:
        d = atoms[1][0] - atoms[0][0]
    elif j == k:
        d = atoms[-1][0] - atoms[-2][0]
    else:
        d = atoms[j][0] - atoms[j - 1][0]
    cuts = [rng.choice((0, Fraction(1, 5), Fraction(1, 4), Fraction(1, 3), Fraction(1, 2)))
            for _ in atoms]
    if not any(cuts):
        cuts[rng.randrange(k)] = Fraction(1, 3)
    new_mass = sum(p * t for (_, p), t in zip(atoms, cuts))
    kept = [(x if i < j else x + d, p * (1 - t)) for i, ((x, p), t) in enumerate(zip(atoms, cuts))]
    x_new = atoms[j - 1][0] + d if j > 0 else atoms[0][0]
    return from_pmf(kept + [(x_new, new_mass)])


def random_pair(config: RandomConfig = HALF_GRID, rng: random.Random | None = None) -> tuple:
    """``(F, G)`` with ``G`` independent of ``F`` (30%), a scaled and split
    copy of ``F`` (35%), or ``F`` with an inserted atom (35%)."""
    rng = rng or random.Random(0)
    f = random_dist(config, rng)
    r = rng.random()
    if r < 0.3:
        return f, random_dist(config, rng)
    if r < 0.65:
        return f, spread(f, config, rng)
    return f, insert_atom(f, config, rng)


@dataclass(frozen=True)
class Violation:
    F: DiscreteDist
    G: DiscreteDist
    value_F: object
    value_G: object
    source: str

    def to_json(self) -> dict:
        return {"source": self.source, "F": dist_to_json(self.F), "G": dist_to_json(self.G),
                "value_F": num_to_json(self.value_F), "value_G": num_to_json(self.value_G)}


@dataclass(frozen=True)
class AuditResult:
    measure: str
    order: str
    seed: object
    budget: int
    draws: int
    ordered_pairs: int
    violations: tuple = field(repr=False)

    @property
    def inconclusive(self) -> bool:
        """No ordered pair was found, so an empty violation list proves nothing."""
        return self.ordered_pairs == 0

    @property
    def passed(self) -> bool:
        return not self.inconclusive and not self.violations

    def summary(self) -> dict:
        return {"measure": self.measure, "order": self.order, "seed": self.seed,
                "budget": self.budget, "draws": self.draws,
                "ordered_pairs": self.ordered_pairs, "violations": len(self.violations),
                "inconclusive": self.inconclusive}


def _comparable(spec: MeasureSpec, d: DiscreteDist):
    # compare sd through the exact variance; sqrt is monotone
    if spec.kind == "sd" and not spec.unbiased:
        return variance(d), spec(d)
    v = spec(d)
    return v, v


def preservation_audit(spec, budget: int = 1000, seed=0, *, order: str = "and",
                       config: RandomConfig = HALF_GRID, include_catalog: bool = False,
                       max_draws: Optional[int] = None) -> AuditResult:
    """Check ``tau(F) <= tau(G)`` on random pairs with ``F ⪯ G``.

    Draws continue until ``budget`` ordered pairs were seen or ``max_draws``
    (default ``50 * budget``) pairs were drawn.  With ``include_catalog`` the
    catalog pairs, and for ``iqnr`` the reversal construction at the measure's
    levels, are checked first and count toward the budget.
    """
    if isinstance(spec, str):
        spec = MeasureSpec.parse(spec)
    if budget < 1:
        raise BadParam("budget must be positive")
    check = _order_check(order)
    max_draws = 50 * budget if max_draws is None else max_draws
    violations, ordered, draws = [], 0, 0

    def visit(f, g, source):
        nonlocal ordered
        if not check(f, g):
            return
        ordered += 1
        (kf, vf), (kg, vg) = _comparable(spec, f), _comparable(spec, g)
        if kf > kg:
            violations.append(Violation(f, g, vf, vg, source))

    if include_catalog:
        seeded = [(c.F, c.G, f"catalog:{c.name}") for c in catalog()]
        if spec.kind == "iqnr":
            c = iqr_counterexample(spec.alpha, spec.beta)
            seeded.append((c.F, c.G, f"catalog:{c.name}"))
        for f, g, source in seeded:
            if ordered < budget:
                visit(f, g, source)
    while ordered < budget and draws < max_draws:
        f, g = random_pair(config, draw_rng(seed, draws))
        visit(f, g, f"draw:{draws}")
        draws += 1
    return AuditResult(spec.name, order, seed, budget, draws, ordered, tuple(violations))


@dataclass(frozen=True)
class TransitivityResult:
    order: str
    witness: Optional[tuple]
    triples: int
    rounds: int

    def __bool__(self) -> bool:
        return self.witness is not None

    def summary(self) -> dict:
        out = {"order": self.order, "found": self.witness is not None,
               "triples": self.triples, "rounds": self.rounds}
        if self.witness is not None:
            out["witness"] = {k: dist_to_json(d) for k, d in zip("FGH", self.witness)}
        return out


def transitivity_search(order: str = "and", budget: int = 10_000, seed=0, *,
                        config: RandomConfig = HALF_GRID, pool_size: int = 200,
                        max_rounds: int = 1000) -> TransitivityResult:
    """Look for ``F ⪯ G``, ``G ⪯ H`` with ``F ⪯̸ H``.

    Each round draws a pool of distributions and walks every chain
    ``F -> G -> H`` inside it; ``budget`` bounds the number of chains
    examined.  Independent draws are rarely ordered, so chaining inside a
    pool finds far more candidate triples per order check than drawing
    triples directly.
    """
    check = _order_check(order)
    if budget < 1:
        raise BadParam("budget must be positive")
    triples = 0
    for rnd in range(max_rounds):
        pool = [random_dist(config, draw_rng(seed, f"{rnd}:{i}")) for i in range(pool_size)]
        succ: dict = {}

        def successors(i):
            if i not in succ:
                succ[i] = [j for j in range(pool_size) if j != i and check(pool[i], pool[j])]
            return succ[i]

        for i in range(pool_size):
            for j in successors(i):
                for k in successors(j):
                    if k == i:
                        continue
                    triples += 1
                    if not check(pool[i], pool[k]):
                        return TransitivityResult(order, (pool[i], pool[j], pool[k]), triples, rnd + 1)
                    if triples >= budget:
                        return TransitivityResult(order, None, triples, rnd + 1)
    return TransitivityResult(order, None, triples, max_rounds)
