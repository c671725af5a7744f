"""Measure curves over a parameter family, and the uniform-family order scan."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from fractions import Fraction

from ..dist import EXACT, as_fraction, geometric, uniform_range
from ..errors import BadParam
from ..measures import LEFT, parse_specs
from ..orders import leq_disc_and, leq_disc_or, leq_disp

__all__ = [
    "DEFAULT_SPECS",
    "FAMILIES",
    "CurveTable",
    "measure_curves",
    "default_params",
    "UniformScan",
    "uniform_order_scan",
    "is_strictly_decreasing",
    "is_monotone",
]

DEFAULT_SPECS = "sd,gmd,mad,mdmad,iqnr:1/4:3/4,ienr:1/4:3/4"

FAMILIES = ("uniform", "geometric")


def default_params(family: str) -> tuple:
    if family == "uniform":
        return tuple(range(2, 101))
    if family == "geometric":
        return tuple(Fraction(k, 100) for k in range(1, 100))
    raise BadParam(f"unknown family {family!r}; expected one of {FAMILIES}")


def _member(family: str, param, tail_eps, mode: str):
    if family == "uniform":
        return uniform_range(int(param))
    if mode == EXACT:
        return geometric(as_fraction(param), as_fraction(tail_eps))
    return geometric(float(param), float(tail_eps))


@dataclass(frozen=True)
class CurveTable:
    family: str
    columns: tuple
    params: tuple
    values: dict = field(repr=False)  # column name -> tuple of values

    def column(self, name: str) -> tuple:
        return self.values[name]

    def rows(self):
        for i, p in enumerate(self.params):
            yield p, tuple(self.values[c][i] for c in self.columns)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["param", *self.columns])
        for p, vals in self.rows():
            w.writerow([_cell(p), *(_cell(v) for v in vals)])
        return buf.getvalue()


def _cell(v) -> str:
    if isinstance(v, Fraction):
        return str(v.numerator) if v.denominator == 1 else repr(float(v))
    return repr(v) if isinstance(v, float) else str(v)


def measure_curves(family: str, params=None, specs=DEFAULT_SPECS, *,
                   quantile_variant: str = LEFT, tail_eps=Fraction(1, 10**9),
                   mode: str = EXACT) -> CurveTable:
    """One row per parameter value, one column per measure.

    ``family`` is ``"uniform"`` (``U[n]`` on ``{1..n}``) or ``"geometric"``.
    """
    if family not in FAMILIES:
        raise BadParam(f"unknown family {family!r}; expected one of {FAMILIES}")
    params = default_params(family) if params is None else tuple(params)
    if isinstance(specs, str):
        specs = parse_specs(specs, quantile_variant)
    columns = tuple(s.name for s in specs)
    cols = {c: [] for c in columns}
    for p in params:
        d = _member(family, p, tail_eps, mode)
        for s in specs:
            cols[s.name].append(s(d))
    return CurveTable(family, columns, params, {c: tuple(v) for c, v in cols.items()})


def is_strictly_decreasing(values) -> bool:
    return all(b < a for a, b in zip(values, values[1:]))


def is_monotone(values) -> bool:
    up = all(b >= a for a, b in zip(values, values[1:]))
    down = all(b <= a for a, b in zip(values, values[1:]))
    return up or down


@dataclass(frozen=True)
class UniformScan:
    """Outcome of comparing ``U[n]`` with ``U[m]`` for all ``2 <= n < m <= n_max``.

    ``disp_mismatches`` lists pairs where ``leq_disp`` disagrees with
    ``n | m`` (the jump levels of ``U[n]`` are a subset of those of ``U[m]``
    exactly when ``n`` divides ``m``, and all gaps are 1).
    """

    n_max: int
    pairs: int
    and_failures: tuple
    or_failures: tuple
    disp_mismatches: tuple
    disp_holds: tuple

    @property
    def ok(self) -> bool:
        return not (self.and_failures or self.or_failures or self.disp_mismatches)


def uniform_order_scan(n_max: int) -> UniformScan:
    if n_max < 3:
        raise BadParam("n_max must be at least 3")
    dists = {n: uniform_range(n) for n in range(2, n_max + 1)}
    and_fail, or_fail, mismatch, disp_ok = [], [], [], []
    pairs = 0
    for n in range(2, n_max + 1):
        for m in range(n + 1, n_max + 1):
            pairs += 1
            x, y = dists[n], dists[m]
            if not leq_disc_and(x, y):
                and_fail.append((n, m))
            if not leq_disc_or(x, y):
                or_fail.append((n, m))
            disp = leq_disp(x, y).holds
            if disp:
                disp_ok.append((n, m))
            if disp != (m % n == 0):
                mismatch.append((n, m))
    return UniformScan(n_max, pairs, tuple(and_fail), tuple(or_fail), tuple(mismatch), tuple(disp_ok))
