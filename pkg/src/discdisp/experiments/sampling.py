"""Seeded random distributions for the randomized audits."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from ..dist import DiscreteDist, from_pmf
from ..errors import BadParam

__all__ = ["RandomConfig", "random_dist", "nested_pair", "draw_rng", "HALF_GRID", "LATTICE"]

Seed = Union[int, str]


@dataclass(frozen=True)
class RandomConfig:
    """Bounds for :func:`random_dist`.

    Probabilities are random compositions of ``denom`` into ``k`` positive
    parts; support points are distinct multiples of ``grid_step`` in
    ``[0, (grid_size - 1) * grid_step]``.  With ``lattice=True`` the support
    is an arithmetic progression instead.
    """

    k_min: int = 2
    k_max: int = 5
    denom: int = 12
    grid_step: Fraction = Fraction(1, 2)
    grid_size: int = 16
    lattice: bool = False

    def __post_init__(self):
        if not 2 <= self.k_min <= self.k_max:
            raise BadParam("need 2 <= k_min <= k_max")
        if self.denom < self.k_max:
            raise BadParam("denom must be at least k_max")
        if self.grid_size < self.k_max:
            raise BadParam("grid_size must be at least k_max")


HALF_GRID = RandomConfig()
LATTICE = RandomConfig(lattice=True)


def draw_rng(seed: Seed, index: int | None = None) -> random.Random:
    """Independent generator for draw ``index`` of a run seeded by ``seed``."""
    key = f"{seed}" if index is None else f"{seed}:{index}"
    return random.Random(key)


def _composition(rng: random.Random, total: int, k: int) -> list:
    cuts = sorted(rng.sample(range(1, total), k - 1))
    return [b - a for a, b in zip([0] + cuts, cuts + [total])]


def random_dist(config: RandomConfig = HALF_GRID, seed: Seed | random.Random = 0) -> DiscreteDist:
    """Exact-mode random distribution; identical output for identical seeds."""
    rng = seed if isinstance(seed, random.Random) else draw_rng(seed)
    k = rng.randint(config.k_min, config.k_max)
    weights = _composition(rng, config.denom, k)
    step = Fraction(config.grid_step)
    if config.lattice:
        max_gap = max(1, (config.grid_size - 1) // (k - 1))
        gap = rng.randint(1, max_gap)
        start = rng.randint(0, config.grid_size - 1 - gap * (k - 1))
        points = [start + gap * j for j in range(k)]
    else:
        points = sorted(rng.sample(range(config.grid_size), k))
    return from_pmf([(step * x, Fraction(w, config.denom)) for x, w in zip(points, weights)])


def nested_pair(config: RandomConfig = HALF_GRID, seed: Seed | random.Random = 0) -> tuple:
    """Pair ``(F, G)`` whose jump levels satisfy ``F(D_F) ⊆ G(D_G)``.

    ``G`` is drawn by :func:`random_dist`; ``F`` merges runs of adjacent
    jumps of ``G`` and gets its own random support on the same grid.
    """
    rng = seed if isinstance(seed, random.Random) else draw_rng(seed)
    g = random_dist(config, rng)
    levels = list(g.levels)
    keep = sorted(rng.sample(levels, rng.randint(1, len(levels))))
    bounds = [Fraction(0)] + keep + [Fraction(1)]
    probs = [b - a for a, b in zip(bounds, bounds[1:])]
    step = Fraction(config.grid_step)
    points = sorted(rng.sample(range(config.grid_size), len(probs)))
    return from_pmf([(step * x, p) for x, p in zip(points, probs)]), g
