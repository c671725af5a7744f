"""Index relations linking the jumps and constant intervals of two cdfs.

Indices are 1-based throughout: atom ``a`` of ``F`` owns the open jump
interval ``(F(x_{a-1}), F(x_a))`` with ``F(x_0) = 0``, and for ``a >= 2``
the constant interval ``[x_{a-1}, x_a)`` on which ``F`` equals
``F(x_{a-1})``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .dist import DiscreteDist
from .errors import ConditionOneViolated, IndexOutOfRange

__all__ = [
    "RelationSet",
    "pair_tol",
    "rel_join",
    "rel_join_bruteforce",
    "rel_and",
    "rel_or",
    "nn_set",
    "rel_and_via_nn",
    "rel_or_via_nn",
    "condition_one_holds",
]

JOIN, AND, OR = "join", "and", "or"


@dataclass(frozen=True)
class RelationSet:
    kind: str
    pairs: frozenset

    def __contains__(self, pair) -> bool:
        return tuple(pair) in self.pairs

    def __iter__(self):
        return iter(self.sorted())

    def __len__(self) -> int:
        return len(self.pairs)

    def sorted(self) -> list:
        return sorted(self.pairs)

    def transpose(self) -> "RelationSet":
        return RelationSet(self.kind, frozenset((b, a) for a, b in self.pairs))

    def row(self, a: int) -> list:
        return sorted(b for x, b in self.pairs if x == a)

    def to_json(self) -> dict:
        return {"kind": self.kind, "pairs": [list(p) for p in self.sorted()]}


def pair_tol(F: DiscreteDist, G: DiscreteDist):
    """Level tolerance for comparing F against G: zero only if both exact."""
    return max(F.tol, G.tol)


def _before(u, v, tol) -> bool:
    return u < v - tol


def rel_join(F: DiscreteDist, G: DiscreteDist) -> RelationSet:
    """Pairs ``(a, b)`` whose open jump intervals overlap.

    Single merge pass over both cdf level sequences.  Intervals that only
    touch at a common level do not overlap.
    """
    tol = pair_tol(F, G)
    cf, cg = F.cum, G.cum
    pairs = set()
    i = j = 0
    while i < F.n and j < G.n:
        pairs.add((i + 1, j + 1))
        if _before(cf[i], cg[j], tol):
            i += 1
        elif _before(cg[j], cf[i], tol):
            j += 1
        else:
            i += 1
            j += 1
    return RelationSet(JOIN, frozenset(pairs))


def rel_join_bruteforce(F: DiscreteDist, G: DiscreteDist) -> RelationSet:
    """Quadratic reference implementation of :func:`rel_join`."""
    tol = pair_tol(F, G)
    zero = 0
    pairs = set()
    for a in range(1, F.n + 1):
        lo_f = F.cum[a - 2] if a >= 2 else zero
        hi_f = F.cum[a - 1]
        for b in range(1, G.n + 1):
            lo_g = G.cum[b - 2] if b >= 2 else zero
            hi_g = G.cum[b - 1]
            if max(lo_f, lo_g) < min(hi_f, hi_g) - tol:
                pairs.add((a, b))
    return RelationSet(JOIN, frozenset(pairs))


def rel_and(F: DiscreteDist, G: DiscreteDist, join: RelationSet | None = None) -> RelationSet:
    """``a ⋈ b`` and ``a-1 ⋈ b-1``, on indices ``a, b >= 2``."""
    rel = (join or rel_join(F, G)).pairs
    pairs = frozenset((a, b) for a, b in rel if a >= 2 and b >= 2 and (a - 1, b - 1) in rel)
    return RelationSet(AND, pairs)


def rel_or(F: DiscreteDist, G: DiscreteDist, join: RelationSet | None = None) -> RelationSet:
    """``a ⋈ b`` or ``a-1 ⋈ b-1``, on indices ``a, b >= 2``."""
    rel = (join or rel_join(F, G)).pairs
    pairs = {(a, b) for a, b in rel if a >= 2 and b >= 2}
    pairs.update((a + 1, b + 1) for a, b in rel if a < F.n and b < G.n)
    return RelationSet(OR, frozenset(pairs))


def nn_set(F: DiscreteDist, G: DiscreteDist, a: int) -> tuple:
    """Nearest interior cdf levels of ``G`` below and above ``F(x_{a-1})``.

    Returns one or two levels in increasing order; a level of ``G`` that
    coincides with ``F(x_{a-1})`` is returned alone.
    """
    if not 2 <= a <= F.n:
        raise IndexOutOfRange(f"index {a} outside 2..{F.n}")
    tol = pair_tol(F, G)
    p = F.cum[a - 2]
    below = [g for g in G.levels if g <= p + tol]
    above = [g for g in G.levels if g >= p - tol]
    out = []
    if below:
        out.append(max(below))
    if above:
        hi = min(above)
        if not out or abs(hi - out[0]) > tol:
            out.append(hi)
    return tuple(out)


def condition_one_holds(F: DiscreteDist, G: DiscreteDist, join: RelationSet | None = None) -> bool:
    """``q_b <= p_a`` for every overlapping pair of jumps."""
    join = join or rel_join(F, G)
    tol = pair_tol(F, G)
    return all(G.probs[b - 1] <= F.probs[a - 1] + tol for a, b in join.pairs)


def _level_in(level, values, tol) -> bool:
    return any(abs(level - v) <= tol for v in values)


def rel_and_via_nn(F: DiscreteDist, G: DiscreteDist) -> RelationSet:
    """``rel_and`` recomputed from nearest neighbours of ``F`` in ``G``.

    Valid only when the jump-height condition holds for ``(F, G)``.
    """
    if not condition_one_holds(F, G):
        raise ConditionOneViolated("nearest-neighbour form needs q_b <= p_a on all related jumps")
    tol = pair_tol(F, G)
    pairs = set()
    for a in range(2, F.n + 1):
        nn = nn_set(F, G, a)
        for beta in range(2, G.n + 1):
            if _level_in(G.cum[beta - 2], nn, tol):
                pairs.add((a, beta))
    return RelationSet(AND, frozenset(pairs))


def rel_or_via_nn(F: DiscreteDist, G: DiscreteDist) -> RelationSet:
    """``rel_or`` recomputed from nearest neighbours of ``G`` in ``F``."""
    if not condition_one_holds(F, G):
        raise ConditionOneViolated("nearest-neighbour form needs q_b <= p_a on all related jumps")
    tol = pair_tol(F, G)
    pairs = set()
    for b in range(2, G.n + 1):
        nn = nn_set(G, F, b)
        for alpha in range(2, F.n + 1):
            if _level_in(F.cum[alpha - 2], nn, tol):
                pairs.add((alpha, b))
    return RelationSet(OR, frozenset(pairs))
