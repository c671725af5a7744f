"""Dispersion measures for finite discrete distributions.

Exact-mode inputs give exact rationals for everything except ``sd``,
whose square root is taken in floating point (``variance`` stays exact).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .dist import (
    DiscreteDist,
    Scalar,
    expectile,
    mean,
    quantile,
    quantile_mid,
    to_scalar,
    variance,
)
from .errors import BadParam

__all__ = [
    "LEFT",
    "MID",
    "MeasureSpec",
    "parse_specs",
    "sd",
    "variance",
    "gmd",
    "mad",
    "mdmad",
    "median",
    "iqnr",
    "ienr",
]

LEFT, MID = "left", "mid"
_QUANTILES = {LEFT: quantile, MID: quantile_mid}


def _quantile_fn(variant: str):
    try:
        return _QUANTILES[variant]
    except KeyError:
        raise BadParam(f"unknown quantile variant {variant!r}") from None


def _bessel(d: DiscreteDist) -> Fraction:
    if d.sample_size is None or d.sample_size < 2:
        raise BadParam("unbiased estimate needs an empirical distribution with sample_size >= 2")
    return Fraction(d.sample_size, d.sample_size - 1)


def sd(d: DiscreteDist, unbiased: bool = False) -> float:
    """Standard deviation.  ``unbiased=True`` applies the ``N/(N-1)``
    variance correction for empirical distributions built from samples."""
    var = variance(d)
    if unbiased:
        var = var * _bessel(d)
    return math.sqrt(var)


def gmd(d: DiscreteDist, unbiased: bool = False) -> Scalar:
    """Gini mean difference ``E|X - X'|``.

    Uses ``2 * sum_j (x_{j+1} - x_j) F(x_j) (1 - F(x_j))``, which is linear
    in the number of atoms.  ``unbiased=True`` gives the U-statistic over
    distinct sample pairs, i.e. the plug-in value times ``N/(N-1)``.
    """
    total = Fraction(0) if d.exact else 0.0
    for j in range(d.n - 1):
        f = d.cum[j]
        total += (d.support[j + 1] - d.support[j]) * f * (1 - f)
    total = 2 * total
    if unbiased:
        total = total * _bessel(d)
    return total


def _abs_dev(d: DiscreteDist, centre) -> Scalar:
    return sum((abs(x - centre) * p for x, p in d.atoms), Fraction(0) if d.exact else 0.0)


def mad(d: DiscreteDist) -> Scalar:
    """Mean absolute deviation from the mean."""
    return _abs_dev(d, mean(d))


def median(d: DiscreteDist, variant: str = LEFT) -> Scalar:
    return _quantile_fn(variant)(d, Fraction(1, 2))


def mdmad(d: DiscreteDist, variant: str = LEFT) -> Scalar:
    """Mean absolute deviation from the median."""
    return _abs_dev(d, median(d, variant))


def iqnr(d: DiscreteDist, alpha=Fraction(1, 4), beta=Fraction(3, 4), variant: str = LEFT) -> Scalar:
    """Interquantile range ``F^-1(beta) - F^-1(alpha)``."""
    alpha, beta = to_scalar(alpha), to_scalar(beta)
    if not 0 < alpha < beta < 1:
        raise BadParam(f"need 0 < alpha < beta < 1, got {alpha}, {beta}")
    q = _quantile_fn(variant)
    return q(d, beta) - q(d, alpha)


def ienr(d: DiscreteDist, alpha=Fraction(1, 4), beta=Fraction(3, 4)) -> Scalar:
    """Interexpectile range ``e(beta) - e(alpha)``."""
    alpha, beta = to_scalar(alpha), to_scalar(beta)
    if not 0 < alpha < Fraction(1, 2) < beta < 1:
        raise BadParam(f"need 0 < alpha < 1/2 < beta < 1, got {alpha}, {beta}")
    return expectile(d, beta) - expectile(d, alpha)


KINDS = ("sd", "gmd", "mad", "mdmad", "iqnr", "ienr")


@dataclass(frozen=True)
class MeasureSpec:
    """One configured measure, e.g. ``MeasureSpec("iqnr", 1/4, 3/4)``.

    The textual form used on the command line is ``kind[:alpha:beta]``.
    ``unbiased`` only affects ``sd`` and ``gmd`` (see :func:`sd`).
    """

    kind: str
    alpha: Scalar = Fraction(1, 4)
    beta: Scalar = Fraction(3, 4)
    quantile_variant: str = LEFT
    unbiased: bool = False

    def __post_init__(self):
        if self.kind not in KINDS:
            raise BadParam(f"unknown measure {self.kind!r}")
        _quantile_fn(self.quantile_variant)
        if self.kind == "iqnr" and not 0 < self.alpha < self.beta < 1:
            raise BadParam("iqnr needs 0 < alpha < beta < 1")
        if self.kind == "ienr" and not 0 < self.alpha < Fraction(1, 2) < self.beta < 1:
            raise BadParam("ienr needs 0 < alpha < 1/2 < beta < 1")

    @classmethod
    def parse(cls, text: str, quantile_variant: str = LEFT) -> "MeasureSpec":
        kind, *levels = text.strip().split(":")
        if levels and len(levels) != 2:
            raise BadParam(f"expected kind:alpha:beta, got {text!r}")
        if levels:
            return cls(kind, to_scalar(levels[0]), to_scalar(levels[1]), quantile_variant)
        return cls(kind, quantile_variant=quantile_variant)

    @property
    def name(self) -> str:
        if self.kind in ("iqnr", "ienr"):
            return f"{self.kind}:{self.alpha}:{self.beta}"
        return self.kind

    def __call__(self, d: DiscreteDist) -> Scalar:
        if self.kind == "sd":
            return sd(d, self.unbiased)
        if self.kind == "gmd":
            return gmd(d, self.unbiased)
        if self.kind == "mad":
            return mad(d)
        if self.kind == "mdmad":
            return mdmad(d, self.quantile_variant)
        if self.kind == "iqnr":
            return iqnr(d, self.alpha, self.beta, self.quantile_variant)
        return ienr(d, self.alpha, self.beta)


def parse_specs(text: str, quantile_variant: str = LEFT) -> list:
    return [MeasureSpec.parse(s, quantile_variant) for s in text.split(",") if s.strip()]
