"""Finite discrete distributions with exact or floating-point arithmetic.

A :class:`DiscreteDist` stores the identifying sequence of a distribution:
strictly increasing support points ``x_1 < ... < x_n`` with positive jump
heights ``p_1, ..., p_n`` and the cached cdf levels ``F(x_1), ..., F(x_n)``.

Two numeric modes exist.  In *exact* mode every support point and
probability is a :class:`fractions.Fraction`, and all comparisons are
exact.  In *approx* mode everything is a ``float`` and comparisons of cdf
levels use an absolute tolerance ``eps`` (default ``1e-12``).  Mixing a
Fraction with a float in Python arithmetic already yields a float, which
is exactly the promotion rule we want, so no wrapper scalar type is used.
"""

from __future__ import annotations

import bisect
import math
import numbers
from collections import Counter
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence, Union

from .errors import (
    BadParam,
    BadProbability,
    DuplicateValue,
    FewerThanTwoAtoms,
    NonPositiveProb,
    SumNotOne,
)

__all__ = [
    "EPS_CDF",
    "Scalar",
    "DiscreteDist",
    "to_scalar",
    "as_fraction",
    "from_pmf",
    "from_samples",
    "uniform_range",
    "uniform_set",
    "geometric",
    "binomial",
    "poisson",
    "cdf",
    "quantile",
    "quantile_mid",
    "mean",
    "variance",
    "stop_loss",
    "lower_stop_loss",
    "centered",
    "affine",
    "shift",
    "abs_diff_dist",
    "expectile",
    "to_approx",
]

EPS_CDF = 1e-12

Scalar = Union[Fraction, float]

EXACT = "exact"
APPROX = "approx"


def as_fraction(value) -> Fraction:
    """Decimal-faithful rational: ``0.15`` becomes ``3/20``, not the binary float."""
    return Fraction(str(value)) if isinstance(value, float) else Fraction(value)


def to_scalar(value) -> Scalar:
    """Coerce ``value`` to a Fraction when it is rational, else a float.

    Strings are parsed as fractions (``"3/8"``, ``"0.15"``), so decimal
    strings stay exact.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not numeric values here")
    if isinstance(value, numbers.Rational):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, numbers.Real):
        return float(value)
    raise TypeError(f"cannot interpret {value!r} as a number")


def _is_exact(value) -> bool:
    return isinstance(value, Fraction)


@dataclass(frozen=True)
class DiscreteDist:
    """Canonical finite member of the purposive discrete class.

    Build instances through :func:`from_pmf` or the family constructors;
    the raw constructor only re-checks invariants.
    """

    support: tuple
    probs: tuple
    cum: tuple = field(repr=False)
    tail_defect: Scalar = Fraction(0)
    mode: str = EXACT
    label: str = field(default="", compare=False)
    eps: float = field(default=EPS_CDF, compare=False, repr=False)
    sample_size: Optional[int] = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        n = len(self.support)
        if n < 2:
            raise FewerThanTwoAtoms(f"need at least two support points, got {n}")
        if len(self.probs) != n or len(self.cum) != n:
            raise ValueError("support, probs and cum must have equal length")
        if any(b <= a for a, b in zip(self.support, self.support[1:])):
            raise ValueError("support must be strictly increasing")
        if any(p <= 0 for p in self.probs):
            raise NonPositiveProb("all jump heights must be positive")
        if self.cum[-1] != 1:
            raise SumNotOne("last cdf level must be 1")

    def __len__(self) -> int:
        return len(self.support)

    @property
    def n(self) -> int:
        return len(self.support)

    @property
    def exact(self) -> bool:
        return self.mode == EXACT

    @property
    def tol(self):
        """Comparison tolerance for cdf levels: 0 in exact mode."""
        return 0 if self.exact else self.eps

    @property
    def atoms(self) -> list:
        return list(zip(self.support, self.probs))

    @property
    def levels(self) -> tuple:
        """Interior cdf levels F(D_F), i.e. all cum values except the final 1."""
        return self.cum[:-1]

    @property
    def span(self) -> Scalar:
        return self.support[-1] - self.support[0]

    @property
    def gaps(self) -> tuple:
        s = self.support
        return tuple(b - a for a, b in zip(s, s[1:]))

    def with_label(self, label: str) -> "DiscreteDist":
        return replace(self, label=label)

    def __str__(self) -> str:
        name = self.label or "DiscreteDist"
        body = ", ".join(f"{x}: {p}" for x, p in self.atoms)
        return f"{name}{{{body}}}"


def _build(support, probs, *, mode, label, eps, tail_defect=None) -> DiscreteDist:
    cum = []
    acc = Fraction(0) if mode == EXACT else 0.0
    for p in probs:
        acc = acc + p
        cum.append(acc)
    if mode == EXACT:
        if acc != 1:
            raise SumNotOne(f"probabilities sum to {acc}, not 1")
    else:
        if abs(acc - 1.0) > eps * max(1, len(probs)):
            raise SumNotOne(f"probabilities sum to {acc!r}, not 1 within tolerance")
        cum[-1] = 1.0
    if tail_defect is None:
        tail_defect = Fraction(0) if mode == EXACT else 0.0
    return DiscreteDist(tuple(support), tuple(probs), tuple(cum), tail_defect,
                        mode, label, eps)


def from_pmf(points: Iterable | Mapping, *, label: str = "", eps: float = EPS_CDF,
             tail_defect=None) -> DiscreteDist:
    """Build a canonical distribution from ``(value, prob)`` pairs.

    Duplicate values are merged by summing their probabilities and the
    support is sorted.  The result is exact iff every value and
    probability is rational (int, Fraction or numeric string).
    """
    if isinstance(points, Mapping):
        points = points.items()
    pairs = [(to_scalar(v), to_scalar(p)) for v, p in points]
    exact = all(_is_exact(v) and _is_exact(p) for v, p in pairs)
    if not exact:
        pairs = [(float(v), float(p)) for v, p in pairs]
    for _, p in pairs:
        if p <= 0:
            raise NonPositiveProb(f"probability {p} is not positive")
    merged: dict = {}
    for v, p in pairs:
        merged[v] = merged.get(v, 0) + p
    if len(merged) < 2:
        raise FewerThanTwoAtoms(f"need at least two distinct values, got {len(merged)}")
    support = sorted(merged)
    probs = [merged[v] for v in support]
    mode = EXACT if exact else APPROX
    if tail_defect is not None:
        tail_defect = to_scalar(tail_defect)
        if not exact:
            tail_defect = float(tail_defect)
    return _build(support, probs, mode=mode, label=label, eps=eps, tail_defect=tail_defect)


def from_samples(counts: Iterable | Mapping, *, label: str = "") -> DiscreteDist:
    """Empirical distribution from ``(value, count)`` pairs.

    Zero counts are dropped (tables often list them); negative or
    non-integer counts are rejected.
    """
    if isinstance(counts, Mapping):
        counts = counts.items()
    tally: Counter = Counter()
    for v, c in counts:
        if isinstance(c, bool) or not isinstance(c, numbers.Integral):
            raise BadParam(f"count {c!r} is not an integer")
        if c < 0:
            raise BadParam(f"count {c} is negative")
        if c:
            tally[to_scalar(v)] += int(c)
    total = sum(tally.values())
    if total == 0:
        raise FewerThanTwoAtoms("no observations")
    d = from_pmf([(v, Fraction(c, total)) for v, c in tally.items()], label=label)
    return replace(d, sample_size=total)


def uniform_range(n: int) -> DiscreteDist:
    """Discrete uniform law on ``{1, ..., n}``."""
    if not isinstance(n, numbers.Integral) or n < 2:
        raise BadParam(f"uniform_range needs an integer n >= 2, got {n!r}")
    p = Fraction(1, n)
    return _build([Fraction(k) for k in range(1, n + 1)], [p] * n,
                  mode=EXACT, label=f"U[{n}]", eps=EPS_CDF)


def uniform_set(values: Sequence) -> DiscreteDist:
    """Generalized discrete uniform law putting mass ``1/|S|`` on each value."""
    vals = [to_scalar(v) for v in values]
    if len(set(vals)) != len(vals):
        raise DuplicateValue("uniform_set needs distinct values")
    if len(vals) < 2:
        raise FewerThanTwoAtoms("uniform_set needs at least two values")
    m = len(vals)
    p = Fraction(1, m) if all(_is_exact(v) for v in vals) else 1.0 / m
    return from_pmf([(v, p) for v in vals], label=f"U({sorted(vals)})")


def _check_open_unit(name: str, value) -> Scalar:
    value = to_scalar(value)
    if not 0 < value < 1:
        raise BadParam(f"{name} must lie strictly between 0 and 1, got {value}")
    return value


def _truncation_point(ratio: Scalar, tail_eps: Scalar) -> int:
    """Smallest m >= 1 with ratio**m <= tail_eps."""
    m = max(1, math.ceil(math.log(float(tail_eps)) / math.log(float(ratio))) - 1)
    while ratio ** m > tail_eps:
        m += 1
    while m > 1 and ratio ** (m - 1) <= tail_eps:
        m -= 1
    return m


def geometric(pi, tail_eps=Fraction(1, 10**9)) -> DiscreteDist:
    """Geometric law ``P(X = k) = pi (1 - pi)^(k-1)`` on ``k = 1, 2, ...``.

    The support is cut at the smallest ``m`` with ``(1 - pi)^m <= tail_eps``;
    the remaining tail mass ``(1 - pi)^m`` is lumped onto atom ``m`` and
    recorded as ``tail_defect``.  Rational ``pi`` gives an exact result.
    """
    pi = _check_open_unit("pi", pi)
    tail_eps = _check_open_unit("tail_eps", tail_eps)
    lam = 1 - pi
    m = max(2, _truncation_point(lam, tail_eps))
    if _is_exact(pi):
        # integer bookkeeping keeps Fraction normalisation cheap
        a, b = pi.numerator, pi.denominator
        c = b - a
        probs = []
        num, den = a, b
        for _ in range(m - 1):
            probs.append(Fraction(num, den))
            num *= c
            den *= b
        probs.append(Fraction(c ** (m - 1), b ** (m - 1)))
        support = [Fraction(k) for k in range(1, m + 1)]
        cum = [1 - Fraction(c ** k, b ** k) for k in range(1, m)] + [Fraction(1)]
        return DiscreteDist(tuple(support), tuple(probs), tuple(cum), lam ** m,
                            EXACT, f"Geom({pi})", EPS_CDF)
    probs = [pi * lam ** (k - 1) for k in range(1, m)] + [lam ** (m - 1)]
    support = [float(k) for k in range(1, m + 1)]
    cum = [1.0 - lam ** k for k in range(1, m)] + [1.0]
    return DiscreteDist(tuple(support), tuple(probs), tuple(cum), lam ** m,
                        APPROX, f"Geom({pi})", EPS_CDF)


def binomial(n: int, pi) -> DiscreteDist:
    """Binomial law on ``{0, ..., n}``; exact when ``pi`` is rational."""
    if not isinstance(n, numbers.Integral) or n < 1:
        raise BadParam(f"binomial needs an integer n >= 1, got {n!r}")
    pi = _check_open_unit("pi", pi)
    probs = [math.comb(n, k) * pi ** k * (1 - pi) ** (n - k) for k in range(n + 1)]
    return from_pmf([(k, p) for k, p in enumerate(probs)], label=f"Bin({n}, {pi})")


def poisson(lam, tail_eps=1e-12) -> DiscreteDist:
    """Poisson law in approx mode, truncated where the upper tail drops
    below ``tail_eps`` with the residual mass lumped onto the last atom."""
    lam = float(to_scalar(lam))
    tail_eps = float(to_scalar(tail_eps))
    if lam <= 0:
        raise BadParam(f"lambda must be positive, got {lam}")
    if not 0 < tail_eps < 1:
        raise BadParam(f"tail_eps must lie in (0, 1), got {tail_eps}")
    probs = []
    p = math.exp(-lam)
    acc = 0.0
    k = 0
    while True:
        probs.append(p)
        acc += p
        # stop once the remaining mass is negligible and past the mode
        if k >= lam and 1.0 - acc <= tail_eps and k >= 1:
            break
        k += 1
        p = p * lam / k
    tail = max(0.0, 1.0 - acc)
    probs[-1] += tail
    support = [float(j) for j in range(len(probs))]
    cum = []
    run = 0.0
    for q in probs:
        run += q
        cum.append(run)
    cum[-1] = 1.0
    return DiscreteDist(tuple(support), tuple(probs), tuple(cum), tail,
                        APPROX, f"Poisson({lam})", EPS_CDF)


def to_approx(d: DiscreteDist, eps: float = EPS_CDF) -> DiscreteDist:
    """Float copy of ``d``; cdf levels are recomputed in floating point."""
    support = [float(x) for x in d.support]
    probs = [float(p) for p in d.probs]
    cum = [float(c) for c in d.cum]
    cum[-1] = 1.0
    return DiscreteDist(tuple(support), tuple(probs), tuple(cum), float(d.tail_defect),
                        APPROX, d.label, eps, d.sample_size)


# ----------------------------------------------------------------------
# evaluation


def cdf(d: DiscreteDist, t) -> Scalar:
    k = bisect.bisect_right(d.support, t)
    if k == 0:
        return Fraction(0) if d.exact else 0.0
    return d.cum[k - 1]


def _check_level(p) -> None:
    if not 0 < p < 1:
        raise BadProbability(f"probability level must lie in (0, 1), got {p}")


def _first_at_least(d: DiscreteDist, p) -> int:
    """0-based index of the first cdf level >= p (tolerant in approx mode)."""
    tol = d.tol
    if tol:
        return min(bisect.bisect_left(d.cum, p - tol), d.n - 1)
    return bisect.bisect_left(d.cum, p)


def quantile(d: DiscreteDist, p) -> Scalar:
    """Left-continuous quantile ``inf{t : F(t) >= p}``."""
    _check_level(p)
    return d.support[_first_at_least(d, p)]


def quantile_mid(d: DiscreteDist, p) -> Scalar:
    """Midpoint quantile ``(inf{t: F(t) >= p} + sup{t: F(t) <= p}) / 2``."""
    _check_level(p)
    lo = _first_at_least(d, p)
    hi = lo
    # sup{t: F(t) <= p} is the first support point whose level exceeds p
    if abs(d.cum[lo] - p) <= d.tol:
        hi = lo + 1
    return (d.support[lo] + d.support[hi]) / 2


def mean(d: DiscreteDist) -> Scalar:
    return sum((x * p for x, p in d.atoms), Fraction(0) if d.exact else 0.0)


def variance(d: DiscreteDist) -> Scalar:
    mu = mean(d)
    return sum(((x - mu) ** 2 * p for x, p in d.atoms), Fraction(0) if d.exact else 0.0)


def stop_loss(d: DiscreteDist, t) -> Scalar:
    """Upper stop-loss transform ``E[(X - t)_+]``."""
    return sum(((x - t) * p for x, p in d.atoms if x > t), Fraction(0) if d.exact else 0.0)


def lower_stop_loss(d: DiscreteDist, t) -> Scalar:
    """``E[(t - X)_+]``."""
    return sum(((t - x) * p for x, p in d.atoms if x < t), Fraction(0) if d.exact else 0.0)


def affine(d: DiscreteDist, a, b) -> DiscreteDist:
    """Law of ``a X + b``; ``a < 0`` reverses the support."""
    a, b = to_scalar(a), to_scalar(b)
    if a == 0:
        raise BadParam("affine map needs a != 0")
    d_exact = d.exact and _is_exact(a) and _is_exact(b)
    pairs = [(a * x + b, p) for x, p in d.atoms]
    if a < 0:
        pairs.reverse()
    support = [x for x, _ in pairs]
    probs = [p for _, p in pairs]
    if not d_exact:
        support = [float(x) for x in support]
        probs = [float(p) for p in probs]
    if a > 0 and d_exact == d.exact:
        cum = d.cum
        return DiscreteDist(tuple(support), tuple(probs), cum, d.tail_defect,
                            d.mode, d.label, d.eps)
    out = _build(support, probs, mode=EXACT if d_exact else APPROX, label=d.label,
                 eps=d.eps, tail_defect=d.tail_defect if d_exact else float(d.tail_defect))
    return out


def shift(d: DiscreteDist, b) -> DiscreteDist:
    return affine(d, 1, b)


def centered(d: DiscreteDist) -> DiscreteDist:
    return shift(d, -mean(d))


def abs_diff_dist(d: DiscreteDist) -> DiscreteDist:
    """Law of ``|X - X'|`` for independent copies ``X, X'`` of ``d``."""
    acc: dict = {}
    for x, p in d.atoms:
        for y, q in d.atoms:
            v = abs(x - y)
            acc[v] = acc.get(v, 0) + p * q
    support = sorted(acc)
    probs = [acc[v] for v in support]
    mode = d.mode
    if mode == APPROX:
        support = [float(v) for v in support]
        probs = [float(p) for p in probs]
    return _build(support, probs, mode=mode, label=f"|X-X'| of {d.label}".strip(),
                  eps=d.eps)


def expectile(d: DiscreteDist, tau) -> Scalar:
    """The ``tau``-expectile, i.e. the root of
    ``tau E[(X - e)_+] - (1 - tau) E[(e - X)_+]``.

    The balance function is linear between neighbouring support points,
    so the root is found segment by segment in closed form.
    """
    _check_level(tau)
    if not d.exact:
        tau = float(tau)
    zero = Fraction(0) if d.exact else 0.0
    xs, ps = d.support, d.probs
    upper = sum((x * p for x, p in zip(xs, ps)), zero)   # sum_{j>k} p_j x_j
    lower = zero                                         # sum_{j<=k} p_j x_j
    for k in range(d.n - 1):
        upper -= xs[k] * ps[k]
        lower += xs[k] * ps[k]
        f = d.cum[k]
        e = (tau * upper + (1 - tau) * lower) / (tau * (1 - f) + (1 - tau) * f)
        if e <= xs[k + 1] or k == d.n - 2:
            return min(max(e, xs[k]), xs[k + 1]) if not d.exact else e
    raise AssertionError("unreachable")
