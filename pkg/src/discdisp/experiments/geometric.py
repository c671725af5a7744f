"""Order region for pairs of geometric laws: closed-form sufficient
condition against numeric verdicts on a parameter grid."""

from __future__ import annotations

import csv
import io
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from ..dist import APPROX, EXACT, as_fraction, geometric
from ..errors import BadParam
from ..orders import leq_disc_and

__all__ = [
    "HOLDS",
    "FAILS",
    "SKIPPED",
    "Cell",
    "SweepGrid",
    "geom_region_theoretical",
    "geom_sweep",
    "grid_axis",
]

HOLDS, FAILS, SKIPPED = "holds", "fails", "skipped"

COLOURS = {HOLDS: "#2ca02c", FAILS: "#d62728", SKIPPED: "#bdbdbd"}


def geom_region_theoretical(pi_f, pi_g) -> bool:
    """Sufficient condition for ``Geom(pi_f) ⪯∧ Geom(pi_g)``.

    With ``lam = 1 - pi_g`` and ``rho = log(1 - pi_f) / log(lam)`` the pair is
    in the region iff ``lam > 1/2`` and ``rho >= log(2 lam - 1)/log(lam) - 1``.
    """
    pf, pg = float(pi_f), float(pi_g)
    if not 0 < pg < pf < 1:
        raise BadParam(f"need 0 < pi_G < pi_F < 1, got pi_F={pi_f}, pi_G={pi_g}")
    lam = 1.0 - pg
    if lam <= 0.5:
        return False
    rho = math.log1p(-pf) / math.log(lam)
    return rho >= math.log(2.0 * lam - 1.0) / math.log(lam) - 1.0


def grid_axis(step) -> tuple:
    """Points ``k * step`` strictly inside ``(0, 1)``, as exact rationals."""
    s = as_fraction(step)
    if not 0 < s <= Fraction(1, 2):
        raise BadParam(f"step must lie in (0, 0.5], got {step}")
    return tuple(k * s for k in range(1, math.ceil(1 / s)) if k * s < 1)


@dataclass(frozen=True)
class Cell:
    pi_f: Fraction
    pi_g: Fraction
    verdict: str
    theory: bool
    approximate: bool = False
    witness: Optional[str] = None


@dataclass(frozen=True)
class SweepGrid:
    """Verdicts of ``Geom(pi_F) ⪯∧ Geom(pi_G)`` on ``axis x axis``.

    ``cells[(i, j)]`` holds the pair ``(axis[i], axis[j])`` = ``(pi_F, pi_G)``.
    """

    axis: tuple
    step: Fraction
    tail_eps: object
    mode: str
    cells: dict = field(repr=False)
    sensitivity: Optional[dict] = None

    def __post_init__(self):
        if any(b <= a for a, b in zip(self.axis, self.axis[1:])):
            raise BadParam("axis must be strictly increasing")
        if not all(0 < a < 1 for a in self.axis):
            raise BadParam("axis must lie in (0, 1)")

    def cell(self, pi_f, pi_g) -> Cell:
        i, j = self.axis.index(as_fraction(pi_f)), self.axis.index(as_fraction(pi_g))
        return self.cells[(i, j)]

    def __iter__(self):
        for key in sorted(self.cells):
            yield self.cells[key]

    @property
    def violations(self) -> list:
        """Cells inside the theoretical region whose numeric verdict fails."""
        return [c for c in self if c.theory and c.verdict != HOLDS]

    def counts(self) -> dict:
        out = {HOLDS: 0, FAILS: 0, SKIPPED: 0}
        for c in self:
            out[c.verdict] += 1
        return out

    def metadata(self) -> dict:
        counts = self.counts()
        meta = {
            "step": str(self.step),
            "tail_eps": str(self.tail_eps),
            "mode": self.mode,
            "cells": len(self.cells),
            **counts,
            "theory_true": sum(c.theory for c in self),
            "holds_outside_theory": sum(c.verdict == HOLDS and not c.theory for c in self),
            "violations": len(self.violations),
            "approximate_verdicts": sum(c.approximate for c in self),
        }
        if self.sensitivity is not None:
            meta["sensitivity"] = self.sensitivity
        return meta

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["pi_F", "pi_G", "theory", "verdict", "approximate"])
        for c in self:
            w.writerow([_dec(c.pi_f), _dec(c.pi_g), int(c.theory), c.verdict, int(c.approximate)])
        return buf.getvalue()

    def to_svg(self, cell_px: int = 0) -> str:
        n = len(self.axis)
        px = cell_px or max(4, min(40, 480 // n))
        side = n * px
        margin, gap = 40, 30
        width = 2 * side + gap + 2 * margin
        height = side + 2 * margin
        out = [
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
            f'viewBox="0 0 {width} {height}">',
            '<rect width="100%" height="100%" fill="white"/>',
        ]
        for panel, title in ((0, "theory"), (1, "numeric")):
            x0 = margin + panel * (side + gap)
            out.append(f'<g id="{title}">')
            out.append(f'<text x="{x0 + side // 2}" y="{margin - 10}" font-size="14" '
                       f'text-anchor="middle">{title}</text>')
            for (i, j), c in sorted(self.cells.items()):
                if panel == 0:
                    state = SKIPPED if c.verdict == SKIPPED or not c.theory else HOLDS
                else:
                    state = c.verdict
                # pi_F runs left to right, pi_G bottom to top
                x, y = x0 + i * px, margin + (n - 1 - j) * px
                out.append(f'<rect x="{x}" y="{y}" width="{px}" height="{px}" '
                           f'fill="{COLOURS[state]}"><title>pi_F={_dec(c.pi_f)} '
                           f'pi_G={_dec(c.pi_g)} {state}</title></rect>')
            out.append(f'<text x="{x0 + side // 2}" y="{margin + side + 25}" font-size="12" '
                       f'text-anchor="middle">pi_F</text>')
            out.append(f'<text x="{x0 - 10}" y="{margin + side // 2}" font-size="12" '
                       f'text-anchor="end">pi_G</text>')
            out.append("</g>")
        out.append("</svg>")
        return "\n".join(out) + "\n"


def _dec(x: Fraction) -> str:
    return repr(float(x))


@lru_cache(maxsize=None)
def _geom(pi: Fraction, tail_eps, mode: str):
    if mode == EXACT:
        return geometric(pi, tail_eps)
    return geometric(float(pi), float(tail_eps))


def _row(args) -> list:
    i, axis, tail_eps, mode = args
    pf = axis[i]
    row = []
    for j, pg in enumerate(axis):
        if pf <= pg:
            row.append(((i, j), Cell(pf, pg, SKIPPED, False)))
            continue
        v = leq_disc_and(_geom(pf, tail_eps, mode), _geom(pg, tail_eps, mode))
        witness = None if v.holds else f"{v.witness.condition}{v.witness.indices}"
        row.append(((i, j), Cell(pf, pg, HOLDS if v.holds else FAILS,
                                 geom_region_theoretical(pf, pg), v.approximate, witness)))
    return row


def _rows(axis, tail_eps, mode, workers: int) -> dict:
    jobs = [(i, axis, tail_eps, mode) for i in range(len(axis))]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_row, jobs))
    else:
        rows = [_row(job) for job in jobs]
    return {key: cell for row in rows for key, cell in row}


def geom_sweep(step=Fraction(1, 100), tail_eps=Fraction(1, 10**9), mode: str = EXACT,
               workers: int = 1, sensitivity_eps=None) -> SweepGrid:
    """Theory and numeric verdict for every grid pair with ``pi_G < pi_F``.

    Cells are keyed by grid coordinates, so the result does not depend on
    ``workers``.  With ``sensitivity_eps`` the numeric pass is repeated at
    that truncation and the number of flipped verdicts is recorded.
    """
    if mode not in (EXACT, APPROX):
        raise BadParam(f"mode must be {EXACT!r} or {APPROX!r}")
    axis = grid_axis(step)
    tail = as_fraction(tail_eps) if mode == EXACT else float(tail_eps)
    cells = _rows(axis, tail, mode, workers)
    sensitivity = None
    if sensitivity_eps is not None:
        tail2 = as_fraction(sensitivity_eps) if mode == EXACT else float(sensitivity_eps)
        other = _rows(axis, tail2, mode, workers)
        flips = sorted((_dec(c.pi_f), _dec(c.pi_g)) for k, c in cells.items()
                       if c.verdict != other[k].verdict)
        sensitivity = {"tail_eps": str(sensitivity_eps), "flipped": len(flips),
                       "flipped_cells": flips[:20]}
    _geom.cache_clear()
    return SweepGrid(axis, as_fraction(step), tail_eps, mode, cells, sensitivity)
