"""Grid sweeps that check every inequality of the bound families numerically.

Each check produces a :class:`VerificationReport`. A case contributes one
signed margin; a case is a violation when its margin falls below ``-tol``
(or is not strictly positive, for strict inequalities). Violations are data:
a sweep always runs to completion.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from typing import Iterable, Sequence

import numpy as np

from . import bound_family as bf
from .bound_family import Family
from .errors import DomainError
from .reference_oracle import HALF_PI, log_coshcos, ratio_coshcos, ratio_sinhsin
from .special_series import (
    DEFAULT_CONFIG,
    SeriesConfig,
    lambda_sum_closed,
    lambda_sum_partial,
    lambda_sum_upper,
    log_ratio,
    zeta_even,
)

DEFAULT_TOL = 1e-12
DEFAULT_ALPHAS = (0.5, 1.0, 1.4)


@dataclass(frozen=True)
class GridSpec:
    points_per_axis: int = 64
    inset: float = 1e-3
    k0_set: tuple[int, ...] = tuple(range(-1, 9))

    def __post_init__(self):
        if isinstance(self.points_per_axis, bool) or int(self.points_per_axis) != self.points_per_axis:
            raise DomainError(f"points_per_axis must be an integer, got {self.points_per_axis!r}")
        if self.points_per_axis < 1:
            raise DomainError(f"points_per_axis must be >= 1, got {self.points_per_axis}")
        if not 0.0 < self.inset < 0.5:
            raise DomainError(f"inset must lie in (0, 0.5), got {self.inset!r}")
        ks = tuple(int(k) for k in self.k0_set)
        if not ks:
            raise DomainError("k0_set must not be empty")
        if list(ks) != sorted(set(ks)) or ks[0] < -1:
            raise DomainError(f"k0_set must be sorted, distinct and >= -1, got {ks}")
        object.__setattr__(self, "k0_set", ks)


@dataclass
class VerificationReport:
    check_name: str
    grid: GridSpec
    cases_run: int
    worst_margin: float
    worst_case_inputs: dict
    violations: list[dict] = field(default_factory=list)
    passed: bool = True

    def to_dict(self) -> dict:
        out = asdict(self)
        out["grid"]["k0_set"] = list(self.grid.k0_set)
        return out


class _Reduction:
    """Order-independent min-margin reduction with lexicographic tie-break."""

    def __init__(self, tol: float):
        self.tol = tol
        self.cases = 0
        self.worst: tuple[float, tuple] | None = None
        self.worst_inputs: dict = {}
        self.violations: list[tuple[tuple, float, dict]] = []

    def add(self, inputs: dict, margin: float, strict: bool = False) -> None:
        self.cases += 1
        key = tuple(inputs.values())
        if self.worst is None or (margin, key) < self.worst:
            self.worst = (margin, key)
            self.worst_inputs = dict(inputs)
        bad = margin <= 0.0 if strict else margin < -self.tol
        if bad or math.isnan(margin):
            self.violations.append((key, margin, dict(inputs)))

    def report(self, name: str, grid: GridSpec) -> VerificationReport:
        violations = [
            {"inputs": inputs, "margin": margin}
            for _, margin, inputs in sorted(self.violations, key=lambda item: item[0])
        ]
        return VerificationReport(
            check_name=name,
            grid=grid,
            cases_run=self.cases,
            worst_margin=self.worst[0] if self.worst is not None else math.inf,
            worst_case_inputs=self.worst_inputs,
            violations=violations,
            passed=not violations,
        )


def unit_grid(points: int, inset: float) -> list[float]:
    """Uniform points on ``[inset, 1 - inset]``; a single point sits at 1/2."""
    if points == 1:
        return [0.5]
    return np.linspace(inset, 1.0 - inset, points).tolist()


def alpha_grid(grid: GridSpec) -> list[float]:
    top = HALF_PI - grid.inset
    return [top * s for s in unit_grid(grid.points_per_axis, grid.inset)]


def verify_lemma(grid: GridSpec = GridSpec(), tol: float = DEFAULT_TOL) -> VerificationReport:
    """bernoulli_log_bound(u, v, k0) >= ln((1+uv)/(1-uv)) over the (u, v, k0) grid."""
    red = _Reduction(tol)
    axis = unit_grid(grid.points_per_axis, grid.inset)
    for u in axis:
        for v in axis:
            reference = log_ratio(u * v)
            for k0 in grid.k0_set:
                margin = bf.bernoulli_log_bound(u, v, k0) - reference
                red.add({"u": u, "v": v, "k0": k0}, margin)
    return red.report("lemma", grid)


def verify_a_monotone(
    grid: GridSpec = GridSpec(),
    k_max: int = 8,
    tol: float = DEFAULT_TOL,
    cfg: SeriesConfig = DEFAULT_CONFIG,
    uv_points: Sequence[tuple[float, float]] | None = None,
) -> VerificationReport:
    """Strict decrease of a_k and agreement of the direct and closed-form gaps.

    The case margin is the smaller of the closed-form gap (must be > 0) and
    ``tail - |direct - closed|`` (must be >= -tol). ``uv_points`` replaces the
    grid by explicit (u, v) points.
    """
    red = _Reduction(tol)
    if uv_points is None:
        axis = unit_grid(grid.points_per_axis, grid.inset)
        uv_points = [(u, v) for u in axis for v in axis]
    for u, v in uv_points:
        seq = bf.a_sequence(u, v, k_max)
        for i, k in enumerate(range(-1, k_max)):
            direct = seq[i] - seq[i + 1]
            closed = bf.a_gap(u, v, k, cfg)
            inputs = {"u": u, "v": v, "k": k}
            if closed.value <= 0.0:
                red.add(inputs, closed.value, strict=True)
                continue
            agreement = closed.tail_bound - abs(direct - closed.value)
            red.add(inputs, min(closed.value, agreement))
    checked = GridSpec(grid.points_per_axis, grid.inset, tuple(range(-1, k_max)))
    return red.report("a_monotone", checked)


def verify_ratio_bounds(
    grid: GridSpec = GridSpec(),
    family: Family | str = Family.COSHCOS,
    tol: float = DEFAULT_TOL,
    pairs: Sequence[tuple[float, float]] | None = None,
) -> VerificationReport:
    """Dominance of the ratio bounds over ``x = alpha * t`` pairs and all k0.

    For cosh/cos the margin also includes the drop from the previous k0 in
    the set, so non-increase in k0 is part of the same case. ``pairs``
    replaces the grid by explicit (x, alpha) pairs.
    """
    family = Family(family)
    red = _Reduction(tol)
    if family is Family.COSHCOS:
        bound, reference = bf.coshcos_bound, ratio_coshcos
    else:
        bound, reference = bf.sinhsin_bound, ratio_sinhsin
    if pairs is None:
        ts = unit_grid(grid.points_per_axis, grid.inset)
        pairs = [(alpha * t, alpha) for alpha in alpha_grid(grid) for t in ts]
    for x, alpha in pairs:
        ref = reference(x)
        previous = None
        for k0 in grid.k0_set:
            b = bound(x, alpha, k0)
            margin = b - ref
            if family is Family.COSHCOS and previous is not None:
                margin = min(margin, previous - b)
            previous = b
            red.add({"x": x, "alpha": alpha, "k0": k0}, margin)
    return red.report(f"ratio_{family.value}", grid)


def verify_limit_bound(
    points: int = 200,
    tol: float = DEFAULT_TOL,
    inset: float = 1e-3,
    chain_ratios: Sequence[float] = (0.5, 0.8),
) -> VerificationReport:
    """The k0 -> infinity bound dominates cosh x/cos x; b_30 stays below it.

    The chain check uses ``alpha = x / r`` for each ``r`` in ``chain_ratios``
    that keeps alpha inside the grid; small ``r`` makes ``(x/alpha)^126``
    negligible so b_30 is effectively at its limit.
    """
    grid = GridSpec(points, inset, (30,))
    red = _Reduction(tol)
    top = HALF_PI - inset
    for t in unit_grid(points, inset):
        x = HALF_PI * t
        limit = bf.coshcos_limit_bound(x)
        red.add({"x": x, "alpha": 0.0}, limit - ratio_coshcos(x))
        for r in chain_ratios:
            alpha = x / r
            if alpha > top:
                continue
            red.add({"x": x, "alpha": alpha}, limit - bf.coshcos_bound(x, alpha, 30))
    return red.report("limit_bound", grid)


def verify_convergence(
    x: float = 0.5, alpha: float = 1.0, k_hi: int = 30, tol: float = 1e-9
) -> VerificationReport:
    """Both ratio bounds at level ``k_hi`` equal the true ratios within ``tol``."""
    red = _Reduction(tol)
    red.add(
        {"family": "coshcos", "x": x, "alpha": alpha},
        -abs(bf.coshcos_bound(x, alpha, k_hi) - ratio_coshcos(x)),
    )
    red.add(
        {"family": "sinhsin", "x": x, "alpha": alpha},
        -abs(bf.sinhsin_bound(x, alpha, k_hi) - ratio_sinhsin(x)),
    )
    return red.report("convergence", GridSpec(1, 1e-3, (k_hi,)))


def log_ratio_over_square(x: float) -> float:
    """ln(cosh x/cos x)/x^2, which increases on (0, pi/2)."""
    return log_coshcos(x) / (x * x)


def verify_best_constant(
    alphas: Iterable[float] = DEFAULT_ALPHAS,
    tol: float = DEFAULT_TOL,
    points: int = 200,
    inset: float = 1e-3,
    shrink: float = 1e-6,
    probe_offset: float = 1e-7,
) -> VerificationReport:
    """Monotone ln(ratio)/x^2, envelope dominance, and optimality of beta.

    Optimality: with ``gamma = beta (1 - shrink)`` the envelope exp(gamma x^2)
    must fall strictly below the ratio at ``x = alpha (1 - probe_offset)``.
    The probe has to sit closer to alpha than the envelope's own slack there,
    which for shrink = 1e-6 means an offset below roughly 5e-7 at alpha = 1.4.
    """
    alphas = tuple(float(a) for a in alphas)
    red = _Reduction(tol)
    top = HALF_PI - inset
    xs = [top * t for t in unit_grid(points, inset)]
    g = [log_ratio_over_square(x) for x in xs]
    for x, g0, g1 in zip(xs, g, g[1:]):
        red.add({"part": "monotone", "alpha": 0.0, "x": x}, g1 - g0)
    ts = unit_grid(points, inset)
    for alpha in alphas:
        for t in ts:
            x = alpha * t
            red.add(
                {"part": "envelope", "alpha": alpha, "x": x},
                bf.exp_envelope(x, alpha) - ratio_coshcos(x),
            )
        gamma = bf.best_exp_constant(alpha) * (1.0 - shrink)
        x = alpha * (1.0 - probe_offset)
        red.add(
            {"part": "optimality", "alpha": alpha, "x": x},
            ratio_coshcos(x) - math.exp(gamma * x * x),
            strict=True,
        )
    return red.report("best_constant", GridSpec(points, inset, (-1,)))


def verify_lambda_sums(
    k_max: int = 8,
    tol: float = DEFAULT_TOL,
    cfg: SeriesConfig = DEFAULT_CONFIG,
    n_terms: int | None = None,
) -> VerificationReport:
    """Closed form of I_k against direct summation, and the two upper bounds."""
    red = _Reduction(tol)
    pi2_8 = math.pi**2 / 8.0
    for k in range(k_max + 1):
        closed = lambda_sum_closed(k, cfg)
        partial = lambda_sum_partial(k, cfg, n_terms=n_terms)
        zeta_tail = zeta_even(2 * k + 1, cfg).tail_bound
        agreement = partial.tail_bound + zeta_tail - abs(closed - partial.value)
        margin = min(agreement, lambda_sum_upper(k) - closed, pi2_8 - closed)
        red.add({"k": k}, margin)
    return red.report("lambda_sums", GridSpec(1, 1e-3, tuple(range(k_max + 1))))


SUITES = ("lemma", "a-monotone", "ratio", "limit", "convergence", "best-constant", "lambda")


def run_suite(
    name: str,
    grid: GridSpec = GridSpec(),
    tol: float = DEFAULT_TOL,
    cfg: SeriesConfig = DEFAULT_CONFIG,
) -> list[VerificationReport]:
    """Run one named suite, or every suite for ``name == "all"``."""
    if name == "all":
        return [r for suite in SUITES for r in run_suite(suite, grid, tol, cfg)]
    if name == "lemma":
        return [verify_lemma(grid, tol)]
    if name == "a-monotone":
        return [verify_a_monotone(grid, 8, tol, cfg)]
    if name == "ratio":
        return [verify_ratio_bounds(grid, fam, tol) for fam in Family]
    if name == "limit":
        return [verify_limit_bound(200, tol, grid.inset)]
    if name == "convergence":
        return [verify_convergence(0.5, 1.0, 30, max(tol, 1e-9))]
    if name == "best-constant":
        return [verify_best_constant(DEFAULT_ALPHAS, tol, inset=grid.inset)]
    if name == "lambda":
        return [verify_lambda_sums(8, tol, cfg)]
    raise DomainError(f"unknown suite {name!r}")
