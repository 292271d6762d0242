"""Certified upper bounds for cosh x/cos x and sinh x/sin x on (0, pi/2)."""

from .bound_family import (
    EvalResult,
    Family,
    LemmaQuery,
    RatioQuery,
    a_gap,
    a_sequence,
    bernoulli_log_bound,
    bernoulli_ratio_bound,
    best_exp_constant,
    coshcos_bound,
    coshcos_limit_bound,
    evaluate,
    exp_envelope,
    sinhsin_bound,
)
from .errors import AccuracyError, DomainError
from .reference_oracle import (
    log_coshcos,
    log_sinhsin,
    product_coshcos,
    product_coshcos_corrected,
    ratio_coshcos,
    ratio_sinhsin,
)
from .special_series import (
    SeriesConfig,
    TruncatedValue,
    lambda_sum_closed,
    lambda_sum_partial,
    lambda_sum_upper,
    log_ratio,
    partial_sum_S,
    zeta_even,
)
from .verification import (
    GridSpec,
    VerificationReport,
    run_suite,
    verify_a_monotone,
    verify_best_constant,
    verify_convergence,
    verify_lambda_sums,
    verify_lemma,
    verify_limit_bound,
    verify_ratio_bounds,
)

__version__ = "0.1.0"
