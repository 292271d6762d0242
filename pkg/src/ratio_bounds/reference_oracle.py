"""Reference values for cosh x/cos x and sinh x/sin x on (0, pi/2).

Direct evaluation is the ground truth every bound is checked against. The
truncated product expansion of cosh x/cos x is kept as an independent route
with its own tail analysis.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import DomainError
from .special_series import TruncatedValue, log_ratio

HALF_PI = 0.5 * math.pi

# below this the sinh/sin quotient is taken from its Taylor polynomials
SINHSIN_SERIES_CUTOFF = 1e-4


def _check_x(x) -> float:
    x = float(x)
    if not 0.0 < x < HALF_PI:
        raise DomainError(f"x must lie in (0, pi/2), got {x!r}")
    return x


def ratio_coshcos(x: float) -> float:
    """cosh x / cos x."""
    x = _check_x(x)
    return math.cosh(x) / math.cos(x)


def ratio_sinhsin(x: float) -> float:
    """sinh x / sin x, with a degree-10 Taylor quotient for tiny x."""
    x = _check_x(x)
    if x < SINHSIN_SERIES_CUTOFF:
        x2 = x * x
        # (sinh x)/x and (sin x)/x through x**10, Horner form
        num = 1 + x2 / 6 * (1 + x2 / 20 * (1 + x2 / 42 * (1 + x2 / 72 * (1 + x2 / 110))))
        den = 1 - x2 / 6 * (1 - x2 / 20 * (1 - x2 / 42 * (1 - x2 / 72 * (1 - x2 / 110))))
        return num / den
    return math.sinh(x) / math.sin(x)


def log_coshcos(x: float) -> float:
    """ln(cosh x / cos x) without cancellation near 0.

    Uses cosh x - 1 = 2 sinh^2(x/2) and 1 - cos x = 2 sin^2(x/2); both
    logarithms then contribute with the same sign.
    """
    x = _check_x(x)
    sh = math.sinh(0.5 * x)
    sn = math.sin(0.5 * x)
    return math.log1p(2.0 * sh * sh) - math.log1p(-2.0 * sn * sn)


def _sinh_minus_sin(x: float) -> float:
    if x < 0.5:
        # 2 * sum_j x^(4j+3)/(4j+3)!, terms shrink by at least x^4/42 per step
        x4 = x**4
        term = x**3 / 6.0
        total = 0.0
        j = 0
        while term > 1e-18 * total or j == 0:
            total += term
            term *= x4 / ((4 * j + 4) * (4 * j + 5) * (4 * j + 6) * (4 * j + 7))
            j += 1
        return 2.0 * total
    return math.sinh(x) - math.sin(x)


def log_sinhsin(x: float) -> float:
    """ln(sinh x / sin x) without cancellation near 0."""
    x = _check_x(x)
    return math.log1p(_sinh_minus_sin(x) / math.sin(x))


def _product_weights(x: float, first: int, last: int) -> np.ndarray:
    n = np.arange(first, last + 1, dtype=float)
    return (4.0 * x * x / math.pi**2) / (2.0 * n - 1.0) ** 2


def product_log_tail(x: float, n_terms: int) -> tuple[float, float]:
    """Enclosure ``(lo, hi)`` of the log of the factors omitted after ``n_terms``.

    With ``w_n = 4x^2/(pi^2 (2n-1)^2)`` the omitted log is
    ``sum_{n>N} log_ratio(w_n)``. Since ``log_ratio(w)/w`` increases with ``w``
    it lies between ``2 * sum w_n`` and ``c * sum w_n`` with
    ``c = log_ratio(w_{N+1})/w_{N+1}``; ``sum w_n`` is enclosed by integrals.
    """
    x = _check_x(x)
    if n_terms < 1:
        raise DomainError(f"n_terms must be >= 1, got {n_terms}")
    scale = 4.0 * x * x / math.pi**2
    w_next = scale / (2.0 * n_terms + 1.0) ** 2
    c = log_ratio(w_next) / w_next
    sum_lo = scale / (2.0 * (2.0 * n_terms + 1.0))
    sum_hi = scale / (2.0 * (2.0 * n_terms - 1.0))
    return 2.0 * sum_lo, c * sum_hi


def product_coshcos(x: float, n_terms: int) -> TruncatedValue:
    """Partial product of the infinite product expansion of cosh x / cos x.

    ``value`` is the product of the first ``n_terms`` factors and
    ``tail_bound`` is an absolute bound, so
    ``value <= cosh x / cos x <= value + tail_bound``.
    """
    x = _check_x(x)
    if isinstance(n_terms, bool) or int(n_terms) != n_terms or n_terms < 1:
        raise DomainError(f"n_terms must be a positive integer, got {n_terms!r}")
    n_terms = int(n_terms)
    logs = 2.0 * np.arctanh(_product_weights(x, 1, n_terms))
    value = math.exp(math.fsum(logs.tolist()))
    _, hi = product_log_tail(x, n_terms)
    return TruncatedValue(value, value * math.expm1(hi))


def product_coshcos_corrected(x: float, n_terms: int) -> TruncatedValue:
    """Partial product scaled to the midpoint of its tail enclosure.

    ``tail_bound`` is the half-width of that enclosure and so bounds the
    distance to the true ratio.
    """
    partial = product_coshcos(x, n_terms)
    lo, hi = product_log_tail(x, n_terms)
    grow_lo, grow_hi = math.expm1(lo), math.expm1(hi)
    value = partial.value * (1.0 + 0.5 * (grow_lo + grow_hi))
    return TruncatedValue(value, 0.5 * partial.value * (grow_hi - grow_lo))
