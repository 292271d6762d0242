"""Upper bounds for ln((1+uv)/(1-uv)), cosh x/cos x and sinh x/sin x.

Every family is indexed by a refinement level ``k0 >= -1``; ``k0 = -1`` is the
empty-sum base case. Sums go through ``math.fsum`` and powers are built by
repeated multiplication so that neighbouring levels share their rounding.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from numbers import Integral

from .errors import DomainError
from .reference_oracle import (
    HALF_PI,
    log_coshcos,
    log_sinhsin,
    ratio_coshcos,
    ratio_sinhsin,
)
from .special_series import (
    DEFAULT_CONFIG,
    SeriesConfig,
    TruncatedValue,
    lambda_sum_closed,
    lambda_sum_partial,
    log_ratio,
    odd_powers,
    partial_sum_S,
    zeta_even,
)

MAX_K0 = 64


class Family(enum.Enum):
    COSHCOS = "coshcos"
    SINHSIN = "sinhsin"


def _check_k0(k0, name="k0") -> int:
    if isinstance(k0, bool) or not isinstance(k0, Integral):
        raise DomainError(f"{name} must be an integer, got {k0!r}")
    if not -1 <= k0 <= MAX_K0:
        raise DomainError(f"{name} must lie in [-1, {MAX_K0}], got {k0}")
    return int(k0)


def _check_uv(u, v) -> tuple[float, float]:
    u, v = float(u), float(v)
    if not 0.0 < u < 1.0:
        raise DomainError(f"u must lie in (0, 1), got {u!r}")
    if not 0.0 < v < 1.0:
        raise DomainError(f"v must lie in (0, 1), got {v!r}")
    return u, v


def _check_x_alpha(x, alpha) -> tuple[float, float]:
    x, alpha = float(x), float(alpha)
    if not 0.0 < alpha < HALF_PI:
        raise DomainError(f"alpha must lie in (0, pi/2), got {alpha!r}")
    if not 0.0 < x < alpha:
        raise DomainError(f"x must lie in (0, alpha) = (0, {alpha!r}), got {x!r}")
    return x, alpha


@dataclass(frozen=True)
class LemmaQuery:
    u: float
    v: float
    k0: int

    def __post_init__(self):
        _check_uv(self.u, self.v)
        _check_k0(self.k0)


@dataclass(frozen=True)
class RatioQuery:
    x: float
    alpha: float
    k0: int
    family: Family = Family.COSHCOS

    def __post_init__(self):
        _check_x_alpha(self.x, self.alpha)
        _check_k0(self.k0)
        object.__setattr__(self, "family", Family(self.family))


@dataclass(frozen=True)
class EvalResult:
    bound: float
    reference: float
    margin: float = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "margin", self.bound - self.reference)

    def as_dict(self) -> dict:
        return {"bound": self.bound, "reference": self.reference, "margin": self.margin}


# ---------------------------------------------------------------- lemma family


def _lemma_terms(u: float, v: float, k0: int) -> list[float]:
    u_pows = odd_powers(u, k0 + 2)
    top = u_pows[-1]  # u^(2k0+3)
    v_pows = odd_powers(v, k0 + 1)
    terms = [
        2.0 * v_pows[k] * (u_pows[k] - top) / (2 * k + 1) for k in range(k0 + 1)
    ]
    terms.append(top * log_ratio(v))
    return terms


def bernoulli_log_bound(u: float, v: float, k0: int) -> float:
    """Refined Bernoulli-type upper bound on ln((1+uv)/(1-uv)).

    Returns ``2 sum_{k<=k0} v^(2k+1) (u^(2k+1) - u^(2k0+3))/(2k+1)
    + u^(2k0+3) ln((1+v)/(1-v))``.
    """
    u, v = _check_uv(u, v)
    k0 = _check_k0(k0)
    return math.fsum(_lemma_terms(u, v, k0))


def bernoulli_ratio_bound(u: float, v: float, k0: int) -> float:
    """exp of :func:`bernoulli_log_bound`; dominates (1+uv)/(1-uv)."""
    return math.exp(bernoulli_log_bound(u, v, k0))


def a_sequence(u: float, v: float, k_max: int) -> list[float]:
    """``[a_{-1}, a_0, ..., a_{k_max}]`` with ``a_k = bernoulli_log_bound(u, v, k)``."""
    u, v = _check_uv(u, v)
    k_max = _check_k0(k_max, "k_max")
    return [math.fsum(_lemma_terms(u, v, k)) for k in range(-1, k_max + 1)]


# switch to the direct tail series once the tail is this small relative to ln
_GAP_DIRECT_THRESHOLD = 1e-3


def _atanh_tail(v: float, first: int, cfg: SeriesConfig) -> tuple[float, float]:
    """``sum_{j>=first} v^(2j+1)/(2j+1)`` with a geometric bound on what is left."""
    v2 = v * v
    if v ** (2 * first) >= _GAP_DIRECT_THRESHOLD:
        # tail is a sizeable share of the total, so the difference is well conditioned
        return 0.5 * log_ratio(v) - partial_sum_S(v, first - 1), 0.0
    terms = []
    p = v ** (2 * first + 1)
    j = first
    for _ in range(cfg.max_terms):
        terms.append(p / (2 * j + 1))
        p *= v2
        j += 1
        rest = p / ((2 * j + 1) * (1.0 - v2))
        if rest <= 2.0**-60 * terms[0]:
            return math.fsum(terms), rest
    rest = p / ((2 * j + 1) * (1.0 - v2))
    return math.fsum(terms), rest


def a_gap(u: float, v: float, k: int, cfg: SeriesConfig = DEFAULT_CONFIG) -> TruncatedValue:
    """Closed form of ``a_k - a_{k+1} = 2 u^(2k+3) (1-u^2) sum_{j>=k+2} v^(2j+1)/(2j+1)``.

    The tail sum is ``ln((1+v)/(1-v))/2 - S_{k+1}(v)`` when that difference is
    well conditioned and is summed directly otherwise.
    """
    u, v = _check_uv(u, v)
    k = _check_k0(k, "k")
    tail, tail_bound = _atanh_tail(v, k + 2, cfg)
    scale = 2.0 * u ** (2 * k + 3) * (1.0 - u) * (1.0 + u)
    return TruncatedValue(scale * tail, scale * tail_bound)


# ------------------------------------------------------------ ratio families


def _refined_log_terms(
    r: float, w: float, k0: int, log_at_alpha: float, constants: list[float]
) -> list[float]:
    # r = (x/alpha)^2, w = base weight; returns the addends of ln(b_k0)
    r_pows = odd_powers(r, k0 + 2)
    top = r_pows[-1]  # (x/alpha)^(4k0+6)
    w_pows = odd_powers(w, k0 + 1)
    terms = [top * log_at_alpha]
    for k in range(k0 + 1):
        terms.append(2.0 * w_pows[k] * (r_pows[k] - top) * constants[k] / (2 * k + 1))
    return terms


def _coshcos_log_terms(x: float, alpha: float, k0: int, lambda_source: str) -> list[float]:
    if lambda_source == "closed":
        constants = [lambda_sum_closed(k) for k in range(k0 + 1)]
    elif lambda_source == "partial":
        constants = [lambda_sum_partial(k).value for k in range(k0 + 1)]
    else:
        raise DomainError(f"lambda_source must be 'closed' or 'partial', got {lambda_source!r}")
    t = x / alpha
    w = 4.0 * alpha * alpha / math.pi**2
    return _refined_log_terms(t * t, w, k0, log_coshcos(alpha), constants)


def _sinhsin_log_terms(x: float, alpha: float, k0: int) -> list[float]:
    constants = [zeta_even(2 * k + 1).value for k in range(k0 + 1)]
    t = x / alpha
    w = alpha * alpha / math.pi**2
    return _refined_log_terms(t * t, w, k0, log_sinhsin(alpha), constants)


def coshcos_bound(x: float, alpha: float, k0: int, lambda_source: str = "closed") -> float:
    """Upper bound ``b_{k0}`` on cosh x/cos x for ``0 < x < alpha < pi/2``.

    ``lambda_source`` picks the odd-denominator sums from the zeta closed form
    (default) or from direct summation.
    """
    x, alpha = _check_x_alpha(x, alpha)
    k0 = _check_k0(k0)
    return math.exp(math.fsum(_coshcos_log_terms(x, alpha, k0, lambda_source)))


def sinhsin_bound(x: float, alpha: float, k0: int) -> float:
    """Upper bound on sinh x/sin x for ``0 < x < alpha < pi/2``."""
    x, alpha = _check_x_alpha(x, alpha)
    k0 = _check_k0(k0)
    return math.exp(math.fsum(_sinhsin_log_terms(x, alpha, k0)))


def coshcos_limit_bound(x: float) -> float:
    """``((pi^2 + 4x^2)/(pi^2 - 4x^2))^(pi^2/8)``, valid on all of (0, pi/2)."""
    x = float(x)
    if not 0.0 < x < HALF_PI:
        raise DomainError(f"x must lie in (0, pi/2), got {x!r}")
    w = 4.0 * x * x / math.pi**2
    return math.exp(math.pi**2 / 8.0 * log_ratio(w))


def best_exp_constant(alpha: float) -> float:
    """Smallest beta with cosh x/cos x <= exp(beta x^2) on (0, alpha)."""
    alpha = float(alpha)
    if not 0.0 < alpha < HALF_PI:
        raise DomainError(f"alpha must lie in (0, pi/2), got {alpha!r}")
    return log_coshcos(alpha) / (alpha * alpha)


def exp_envelope(x: float, alpha: float) -> float:
    """``exp(beta x^2)`` with ``beta = best_exp_constant(alpha)``.

    Evaluated as ``exp((x/alpha)^2 ln(cosh alpha/cos alpha))`` so that it is
    bit-identical to ``coshcos_bound(x, alpha, -1)``.
    """
    x, alpha = _check_x_alpha(x, alpha)
    t = x / alpha
    return math.exp(math.fsum([(t * t) * log_coshcos(alpha)]))


def evaluate(query) -> EvalResult:
    """Bound, reference and margin for a :class:`LemmaQuery` or :class:`RatioQuery`."""
    if isinstance(query, LemmaQuery):
        return EvalResult(
            bernoulli_log_bound(query.u, query.v, query.k0), log_ratio(query.u * query.v)
        )
    if isinstance(query, RatioQuery):
        if query.family is Family.COSHCOS:
            return EvalResult(
                coshcos_bound(query.x, query.alpha, query.k0), ratio_coshcos(query.x)
            )
        return EvalResult(sinhsin_bound(query.x, query.alpha, query.k0), ratio_sinhsin(query.x))
    raise TypeError(f"unsupported query type {type(query).__name__}")
