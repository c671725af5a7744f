"""Decision procedures for stochastic orders between two distributions.

Every check returns an :class:`OrderVerdict`.  Failing verdicts carry a
:class:`Witness` naming the first violated comparison in merged-level
order, so the failure can be re-checked by hand.

Distributions with ``tail_defect > 0`` (truncated infinite families) have
their last atom lumped from an unresolved tail.  That atom's height is not
a genuine jump, so jump-height comparisons involving it are skipped and
the verdict is flagged ``approximate``.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .dist import (
    DiscreteDist,
    Scalar,
    abs_diff_dist,
    cdf,
    centered,
    quantile,
    stop_loss,
)
from .errors import BadParam, NotLattice
from .relations import RelationSet, pair_tol, rel_and, rel_join, rel_or

__all__ = [
    "Witness",
    "OrderVerdict",
    "ORDERS",
    "leq_disp",
    "leq_disp_bruteforce",
    "leq_disc_and",
    "leq_disc_or",
    "leq_st",
    "leq_dil",
    "leq_weak_disp",
    "shift_equivalence",
    "is_lattice",
    "leq_disc_lattice",
    "condition_i",
    "condition_i_via_density",
    "support_measure_check",
    "compare",
]


@dataclass(frozen=True)
class Witness:
    """A violated comparison ``lhs <= rhs``.

    ``condition`` is one of ``"range"``, ``"length"``, ``"i"``, ``"ii"``,
    ``"st"``, ``"dil"`` or ``"lattice"``; ``indices`` are 1-based atom
    indices into ``(F, G)`` where that makes sense, ``point`` the argument
    (cdf level or real ``t``) otherwise.
    """

    condition: str
    lhs: Scalar
    rhs: Scalar
    indices: tuple = ()
    point: Optional[Scalar] = None
    detail: str = ""

    def to_json(self) -> dict:
        return {
            "condition": self.condition,
            "indices": list(self.indices),
            "point": _fmt(self.point),
            "lhs": _fmt(self.lhs),
            "rhs": _fmt(self.rhs),
            "detail": self.detail,
        }


def _fmt(v):
    if v is None:
        return None
    if isinstance(v, Fraction):
        return str(v)
    return v


@dataclass(frozen=True)
class OrderVerdict:
    order: str
    holds: bool
    witness: Optional[Witness] = None
    approximate: bool = False

    def __post_init__(self):
        if self.holds == (self.witness is not None):
            raise ValueError("a witness is present exactly when the order fails")

    def __bool__(self) -> bool:
        return self.holds

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "holds": self.holds,
            "approximate": self.approximate,
            "witness": self.witness.to_json() if self.witness else None,
        }


def _approx(*ds: DiscreteDist) -> bool:
    return any(not d.exact or d.tail_defect > 0 for d in ds)


def _verdict(order: str, witness: Optional[Witness], *ds: DiscreteDist) -> OrderVerdict:
    return OrderVerdict(order, witness is None, witness, _approx(*ds))


def _le(u, v, tol) -> bool:
    return u <= v + tol


def _lumped(d: DiscreteDist) -> int:
    """1-based index of the lumped tail atom, or 0 if there is none."""
    return d.n if d.tail_defect > 0 else 0


# ----------------------------------------------------------------------
# classical dispersive order


def _level_index(d: DiscreteDist, level, tol) -> Optional[int]:
    """0-based index k with ``d.cum[k] == level`` among interior levels."""
    levels = d.levels
    k = bisect.bisect_left(levels, level - tol)
    if k < len(levels) and abs(levels[k] - level) <= tol:
        return k
    return None


def leq_disp(F: DiscreteDist, G: DiscreteDist) -> OrderVerdict:
    """Dispersive order via ranges and constant-interval lengths.

    Holds iff every interior level of ``F`` is an interior level of ``G``
    and the constant interval of ``F`` at that level is no longer than
    the one of ``G``.
    """
    tol = pair_tol(F, G)
    for j, level in enumerate(F.levels):
        k = _level_index(G, level, tol)
        if k is None:
            return _verdict("disp", Witness("range", level, None, (j + 1,), level,
                                            "cdf level of F is not a level of G"), F, G)
        len_f = F.support[j + 1] - F.support[j]
        len_g = G.support[k + 1] - G.support[k]
        if not _le(len_f, len_g, 0):
            return _verdict("disp", Witness("length", len_f, len_g, (j + 2, k + 2), level,
                                            "constant interval of F is longer"), F, G)
    return _verdict("disp", None, F, G)


def _cells(F: DiscreteDist, G: DiscreteDist) -> list:
    """One probability inside every cell of the merged level partition."""
    cuts = sorted(set(F.cum) | set(G.cum) | {0})
    return [(u + v) / 2 for u, v in zip(cuts, cuts[1:]) if v - u > pair_tol(F, G)]


def leq_disp_bruteforce(F: DiscreteDist, G: DiscreteDist) -> bool:
    """Dispersive order straight from its quantile-difference definition.

    Both quantile functions are constant on each cell of the merged level
    partition and left-continuous, so one probability per cell covers
    every ``0 < p0 <= p1 < 1``.  Quadratic; used as a test oracle.
    """
    ps = _cells(F, G)
    qf = [quantile(F, p) for p in ps]
    qg = [quantile(G, p) for p in ps]
    for i in range(len(ps)):
        for j in range(i + 1, len(ps)):
            if qf[j] - qf[i] > qg[j] - qg[i]:
                return False
    return True


# ----------------------------------------------------------------------
# discrete dispersive orders


def condition_i(F: DiscreteDist, G: DiscreteDist, join: RelationSet | None = None) -> Optional[Witness]:
    """First overlapping jump pair with ``q_b > p_a``, or ``None``."""
    join = join or rel_join(F, G)
    tol = pair_tol(F, G)
    skip_f, skip_g = _lumped(F), _lumped(G)
    for a, b in join.sorted():
        if a == skip_f or b == skip_g:
            continue
        p, q = F.probs[a - 1], G.probs[b - 1]
        if not _le(q, p, tol):
            return Witness("i", q, p, (a, b), detail="jump of G exceeds overlapping jump of F")
    return None


def _condition_ii(F: DiscreteDist, G: DiscreteDist, rel: RelationSet) -> Optional[Witness]:
    tol = pair_tol(F, G) if not (F.exact and G.exact) else 0
    for a, b in rel.sorted():
        gf = F.support[a - 1] - F.support[a - 2]
        gg = G.support[b - 1] - G.support[b - 2]
        if not _le(gf, gg, tol):
            return Witness("ii", gf, gg, (a, b), detail="constant interval of F is longer")
    return None


def _leq_disc(F: DiscreteDist, G: DiscreteDist, kind: str) -> OrderVerdict:
    join = rel_join(F, G)
    w = condition_i(F, G, join)
    if w is None:
        rel = rel_and(F, G, join) if kind == "and" else rel_or(F, G, join)
        w = _condition_ii(F, G, rel)
    return _verdict(kind, w, F, G)


def leq_disc_and(F: DiscreteDist, G: DiscreteDist) -> OrderVerdict:
    """``F ⪯∧ G``: jump heights over overlapping jumps, interval lengths
    over pairs related on both sides."""
    return _leq_disc(F, G, "and")


def leq_disc_or(F: DiscreteDist, G: DiscreteDist) -> OrderVerdict:
    """``F ⪯∨ G``: as ``⪯∧`` but interval lengths over pairs related on
    at least one side."""
    return _leq_disc(F, G, "or")


# ----------------------------------------------------------------------
# location and averaged dispersion orders


def leq_st(F: DiscreteDist, G: DiscreteDist) -> OrderVerdict:
    """Usual stochastic order, ``F(t) >= G(t)`` for all ``t``."""
    tol = pair_tol(F, G)
    for t in sorted(set(F.support) | set(G.support)):
        f, g = cdf(F, t), cdf(G, t)
        if not _le(g, f, tol):
            return _verdict("st", Witness("st", g, f, point=t, detail="G(t) > F(t)"), F, G)
    return _verdict("st", None, F, G)


def leq_dil(F: DiscreteDist, G: DiscreteDist) -> OrderVerdict:
    """Dilation order via stop-loss transforms of the centred laws.

    Both transforms are convex, piecewise linear with kinks only at
    support points and share their asymptotes, so comparing them at the
    union of both centred supports is exhaustive.
    """
    cf, cg = centered(F), centered(G)
    tol = pair_tol(F, G)
    for t in sorted(set(cf.support) | set(cg.support)):
        u, v = stop_loss(cf, t), stop_loss(cg, t)
        if not _le(u, v, tol):
            return _verdict("dil", Witness("dil", u, v, point=t,
                                           detail="centred stop-loss of F exceeds G"), F, G)
    return _verdict("dil", None, F, G)


def leq_weak_disp(F: DiscreteDist, G: DiscreteDist) -> OrderVerdict:
    """Weak dispersive order, ``|X - X'| <=st |Y - Y'|``."""
    v = leq_st(abs_diff_dist(F), abs_diff_dist(G))
    return OrderVerdict("weak", v.holds, v.witness, _approx(F, G))


# ----------------------------------------------------------------------
# structure


def shift_equivalence(F: DiscreteDist, G: DiscreteDist) -> Optional[Scalar]:
    """``lam`` with ``G(t) = F(t - lam)`` for all ``t``, else ``None``."""
    if F.n != G.n:
        return None
    tol = pair_tol(F, G)
    if any(abs(p - q) > tol for p, q in zip(F.probs, G.probs)):
        return None
    lam = G.support[0] - F.support[0]
    if any(abs((y - x) - lam) > tol for x, y in zip(F.support, G.support)):
        return None
    return lam


def is_lattice(d: DiscreteDist) -> Optional[Scalar]:
    """Common gap between neighbouring support points, if any."""
    gaps = d.gaps
    c = gaps[0]
    if all(abs(g - c) <= d.tol for g in gaps):
        return c
    return None


def leq_disc_lattice(F: DiscreteDist, G: DiscreteDist) -> OrderVerdict:
    """Lattice shortcut: jump-height condition plus ``c_F <= c_G``."""
    c_f, c_g = is_lattice(F), is_lattice(G)
    if c_f is None or c_g is None:
        raise NotLattice("both distributions must be lattice")
    w = condition_i(F, G)
    if w is None and not _le(c_f, c_g, pair_tol(F, G)):
        w = Witness("lattice", c_f, c_g, detail="lattice gap of F exceeds that of G")
    return _verdict("lattice", w, F, G)


def condition_i_via_density(F: DiscreteDist, G: DiscreteDist) -> bool:
    """Jump-height condition as ``g(G^-1(p)) <= f(F^-1(p))`` for all ``p``.

    Both sides are step functions of ``p`` that are constant on each cell
    of the merged level partition, so one probe per cell suffices.
    """
    tol = pair_tol(F, G)
    for p in _cells(F, G):
        a = bisect.bisect_left(F.cum, p)
        b = bisect.bisect_left(G.cum, p)
        if not _le(G.probs[b], F.probs[a], tol):
            return False
    return True


def support_measure_check(F: DiscreteDist, G: DiscreteDist) -> bool:
    """For an ordered pair: ``span(F) < span(G)`` unless the two laws are
    shifts of each other."""
    if shift_equivalence(F, G) is not None:
        return True
    return F.span < G.span - pair_tol(F, G)


ORDERS = {
    "disp": leq_disp,
    "and": leq_disc_and,
    "or": leq_disc_or,
    "st": leq_st,
    "dil": leq_dil,
    "weak": leq_weak_disp,
}


def compare(F: DiscreteDist, G: DiscreteDist, orders=("disp", "and", "or", "st", "dil", "weak")) -> dict:
    """Run several checks; returns ``{name: OrderVerdict}`` in request order."""
    unknown = [o for o in orders if o not in ORDERS]
    if unknown:
        raise BadParam(f"unknown order(s): {', '.join(unknown)}")
    return {o: ORDERS[o](F, G) for o in orders}
