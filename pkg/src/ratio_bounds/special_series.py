"""Series and constants used by the ratio bounds.

The odd-denominator sums ``I_k = sum_{n>=1} (2n-1)^-(4k+2)`` and the even zeta
values are evaluated as a compensated partial sum plus an Euler-Maclaurin tail.
For the completely monotone summands used here the tail estimate
``int_M^inf f + f(M)/2`` undershoots the true tail by less than the first
omitted correction ``-f'(M)/12``, so that correction is a rigorous bound on the
truncation error and the true value lies in ``[value, value + tail_bound]``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Integral, Real

import numpy as np

from .errors import AccuracyError, DomainError

__all__ = [
    "SeriesConfig",
    "TruncatedValue",
    "DEFAULT_CONFIG",
    "log_ratio",
    "partial_sum_S",
    "zeta_even",
    "lambda_sum_partial",
    "lambda_sum_closed",
    "lambda_sum_upper",
]


@dataclass(frozen=True)
class SeriesConfig:
    """Term budget and accuracy target for truncated series."""

    max_terms: int = 10**6
    target_tail: float = 1e-14

    def __post_init__(self):
        if not isinstance(self.max_terms, Integral) or self.max_terms < 1:
            raise DomainError(f"max_terms must be a positive integer, got {self.max_terms!r}")
        if not (isinstance(self.target_tail, Real) and 0.0 < self.target_tail < math.inf):
            raise DomainError(f"target_tail must be positive and finite, got {self.target_tail!r}")


DEFAULT_CONFIG = SeriesConfig()


@dataclass(frozen=True)
class TruncatedValue:
    """A truncated series value with a rigorous bound on the truncation error.

    ``tail_bound`` covers the omitted terms only; floating-point rounding in
    ``value`` is not included.
    """

    value: float
    tail_bound: float

    def __post_init__(self):
        if not (math.isfinite(self.tail_bound) and self.tail_bound >= 0.0):
            raise DomainError(f"tail_bound must be finite and >= 0, got {self.tail_bound!r}")

    def __float__(self):
        return float(self.value)


def _check_unit_open(name: str, value) -> float:
    value = float(value)
    if not 0.0 < value < 1.0:
        raise DomainError(f"{name} must lie in (0, 1), got {value!r}")
    return value


def _check_index(name: str, value, lowest: int) -> int:
    if isinstance(value, bool) or not isinstance(value, Integral):
        raise DomainError(f"{name} must be an integer, got {value!r}")
    if value < lowest:
        raise DomainError(f"{name} must be >= {lowest}, got {value}")
    return int(value)


def log_ratio(v: float) -> float:
    """Return ln((1+v)/(1-v)) for 0 < v < 1, computed as 2*atanh(v)."""
    v = _check_unit_open("v", v)
    return 2.0 * math.atanh(v)


def odd_powers(z: float, count: int) -> list[float]:
    """Return ``[z, z**3, ..., z**(2*count-1)]`` by repeated multiplication."""
    out = []
    sq = z * z
    p = z
    for _ in range(count):
        out.append(p)
        p *= sq
    return out


def partial_sum_S(a: float, k0: int) -> float:
    """Finite atanh partial sum ``sum_{k=0}^{k0} a^(2k+1)/(2k+1)``.

    ``k0 = -1`` is the empty sum and returns 0.
    """
    a = _check_unit_open("a", a)
    k0 = _check_index("k0", k0, -1)
    powers = odd_powers(a, k0 + 1)
    return math.fsum(p / (2 * k + 1) for k, p in enumerate(powers))


def _em_tail(base: float, step: int, s: int) -> tuple[float, float]:
    # Tail of sum_{n>=M} f(n) with f(t) = (step*t - c)^-s and base = f's argument at M.
    estimate = base ** (1 - s) / (step * (s - 1)) + 0.5 * base ** (-s)
    bound = step * s * base ** (-s - 1) / 12.0
    return estimate, bound


def _min_base(step: int, s: int, target: float) -> float:
    # Smallest argument at which the Euler-Maclaurin bound drops below target.
    return (step * s / (12.0 * target)) ** (1.0 / (s + 1))


def _compensated_power_sum(bases: np.ndarray, s: int) -> float:
    if bases.size == 0:
        return 0.0
    with np.errstate(under="ignore"):
        terms = bases ** (-float(s))
    return math.fsum(terms.tolist())


def zeta_even(m: int, cfg: SeriesConfig = DEFAULT_CONFIG) -> TruncatedValue:
    """Riemann zeta at the even argument ``s = 2m``.

    zeta(2) and zeta(6) are returned from their closed forms. Other values are
    a compensated sum over ``n < N`` plus the Euler-Maclaurin tail at ``N``.

    Raises
    ------
    AccuracyError
        If ``cfg.target_tail`` would need more than ``cfg.max_terms`` terms.
    """
    m = _check_index("m", m, 1)
    return _zeta_even_cached(m, cfg)


@lru_cache(maxsize=256)
def _zeta_even_cached(m: int, cfg: SeriesConfig) -> TruncatedValue:
    if m == 1:
        return TruncatedValue(math.pi**2 / 6.0, 0.0)
    if m == 3:
        return TruncatedValue(math.pi**6 / 945.0, 0.0)
    s = 2 * m
    n_cut = max(1, math.ceil(_min_base(1, s, cfg.target_tail)))
    if n_cut - 1 > cfg.max_terms:
        raise AccuracyError(
            f"zeta({s}) needs {n_cut - 1} terms for tail {cfg.target_tail:g}; "
            f"max_terms is {cfg.max_terms}"
        )
    head = _compensated_power_sum(np.arange(1, n_cut, dtype=float), s)
    tail, bound = _em_tail(float(n_cut), 1, s)
    return TruncatedValue(math.fsum([head, tail]), bound)


def lambda_sum_partial(
    k: int, cfg: SeriesConfig = DEFAULT_CONFIG, n_terms: int | None = None
) -> TruncatedValue:
    """Odd-denominator sum ``I_k = sum_{n>=1} (2n-1)^-(4k+2)`` by direct summation.

    The number of summed terms is the smallest meeting ``cfg.target_tail``
    unless ``n_terms`` forces it, in which case the accuracy target is not
    enforced and the achieved bound is reported.
    """
    k = _check_index("k", k, 0)
    s = 4 * k + 2
    if n_terms is None:
        base = _min_base(2, s, cfg.target_tail)
        # first omitted index M satisfies 2M - 1 >= base; N = M - 1 terms summed
        n_terms = max(1, math.ceil((base + 1.0) / 2.0) - 1)
        if n_terms > cfg.max_terms:
            raise AccuracyError(
                f"I_{k} needs {n_terms} terms for tail {cfg.target_tail:g}; "
                f"max_terms is {cfg.max_terms}"
            )
    else:
        n_terms = _check_index("n_terms", n_terms, 1)
    head = _compensated_power_sum(np.arange(1, 2 * n_terms, 2, dtype=float), s)
    tail, bound = _em_tail(float(2 * n_terms + 1), 2, s)
    return TruncatedValue(math.fsum([head, tail]), bound)


@lru_cache(maxsize=256)
def _lambda_closed_cached(k: int, cfg: SeriesConfig) -> float:
    s = 4 * k + 2
    return (1.0 - 2.0 ** (-s)) * zeta_even(2 * k + 1, cfg).value


def lambda_sum_closed(k: int, cfg: SeriesConfig = DEFAULT_CONFIG) -> float:
    """``I_k`` through the identity ``I_k = (1 - 2^-(4k+2)) * zeta(4k+2)``."""
    k = _check_index("k", k, 0)
    return _lambda_closed_cached(k, cfg)


def lambda_sum_upper(k: int) -> float:
    """Upper bound ``(1 - 2^-(4k+2)) / (1 - 2^-(4k+1))`` on ``I_k``.

    Follows from ``zeta(s) <= 1/(1 - 2^(1-s))``, used here only at ``s = 4k+2``.
    Evaluated in exact rational arithmetic and rounded once.
    """
    k = _check_index("k", k, 0)
    s = 4 * k + 2
    return float(Fraction(2**s - 1, 2**s - 2))
