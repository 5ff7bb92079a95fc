"""Per-step optimal phase for the generalized Grover iterate.

For real amplitude vectors the one-step probability is a concave quadratic in
``cos(phi)``, so the maximizer is ``pi``, an interior ``arccos`` value, or ``0``
depending on which of three alpha-intervals the state is in. For complex
vectors the objective is maximized numerically over the circle.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .amplitude import BetaParams, PolarForm, as_params, wrap_phase
from .errors import DegenerateAlphaError, DomainError, OutsideRegionError
from .grover_map import (
    _closed_form,
    _closed_form_slope,
    as_probability,
    quadratic_coeffs,
)

_INV_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


def arccot(x: float) -> float:
    """Inverse cotangent on the ``(0, pi)`` branch."""
    return math.pi / 2 - math.atan(x)


def region_boundaries(params: BetaParams | int) -> tuple[float, float]:
    """The two alpha values separating the phase-pi, interior and phase-0 regions."""
    params = as_params(params)
    n = params.n_size
    root = 2.0 * math.sqrt(n - 1)
    return 0.5 * arccot((6 - n) / root), 0.5 * arccot((-n - 2) / root)


@dataclass(frozen=True)
class RegionReport:
    region: str
    alpha: float
    boundary_low: float
    boundary_high: float
    phi_opt: float


@dataclass(frozen=True)
class OptimizationResult:
    phi_opt: float
    p_opt: float
    p_pi: float
    improvement: float
    evaluations: int
    region: str | None = None


@dataclass(frozen=True)
class OptimizerConfig:
    """Settings for the numeric search.

    ``scan_points`` uniform probes locate the global basin, which is then
    narrowed in at most ``refine_iters`` halvings (golden steps when the slope
    gives no usable sign change) until the bracket is shorter than ``phi_tol``
    and the objective can gain at most ``tol`` inside it.
    """

    scan_points: int = 1024
    refine_iters: int = 64
    tol: float = 1e-10
    phi_tol: float = 1e-8

    def __post_init__(self):
        if self.scan_points < 4:
            raise DomainError("scan_points must be at least 4")
        if self.refine_iters < 1:
            raise DomainError("refine_iters must be positive")
        if not (self.tol > 0 and self.phi_tol > 0):
            raise DomainError("tolerances must be positive")


def _check_interior_alpha(alpha: float) -> None:
    if alpha == 0.0 or alpha == math.pi / 2:
        raise DegenerateAlphaError(f"alpha = {alpha!r} makes the quadratic in cos(phi) degenerate")
    if not (0.0 < alpha < math.pi / 2):
        raise DomainError(f"alpha must lie in (0, pi/2), got {alpha!r}")


def phi_max_closed_form(params: BetaParams | int, alpha: float) -> float:
    """Interior maximizer ``arccos((-N + 2 - 2 sqrt(N-1) cot(2 alpha)) / 4)``.

    Defined on the closed middle region. Membership is decided by comparing
    alpha with :func:`region_boundaries`; for large N one ulp of alpha moves
    the arccos argument by ~1e-8, so it is clipped to [-1, 1] rather than
    used as the test.
    """
    params = as_params(params)
    _check_interior_alpha(alpha)
    low, high = region_boundaries(params)
    if not low <= alpha <= high:
        raise OutsideRegionError(f"alpha = {alpha!r} is outside the interior region [{low!r}, {high!r}]")
    n = params.n_size
    q = 0.25 * (-n + 2 - 2.0 * math.sqrt(n - 1) * math.cos(2 * alpha) / math.sin(2 * alpha))
    return math.acos(max(-1.0, min(1.0, q)))


def classify_region(params: BetaParams | int, alpha: float) -> RegionReport:
    params = as_params(params)
    _check_interior_alpha(alpha)
    low, high = region_boundaries(params)
    if alpha <= low:
        region, phi = "R1", math.pi
    elif alpha < high:
        region, phi = "R2", phi_max_closed_form(params, alpha)
    else:
        region, phi = "R3", 0.0
    return RegionReport(region, alpha, low, high, phi)


def optimal_phase_real(params: BetaParams | int, alpha: float, *, allow_degenerate: bool = False) -> OptimizationResult:
    """Optimal phase for the real input ``(sin(alpha), cos(alpha))``.

    With ``allow_degenerate`` the endpoints ``alpha in {0, pi/2}`` are accepted:
    the objective is then linear in ``cos(phi)`` and the phase is ``pi`` when
    its slope coefficient is non-negative, else ``0``.
    """
    params = as_params(params)
    if allow_degenerate and alpha in (0.0, math.pi / 2):
        b = quadratic_coeffs(params, alpha).b_coef
        phi, region = (math.pi if b >= 0 else 0.0), None
    else:
        report = classify_region(params, alpha)
        phi, region = report.phi_opt, report.region
    p = PolarForm(alpha, 0.0)
    n = params.n_size
    p_opt = as_probability(_closed_form(n, p.alpha, 0.0, phi))
    p_pi = as_probability(_closed_form(n, p.alpha, 0.0, math.pi))
    return OptimizationResult(phi, p_opt, p_pi, p_opt - p_pi, 2, region)


def _bisect_slope(slope, lo, hi, s_lo, s_hi, cfg):
    # stop once the bracket meets phi_tol and the remaining possible gain meets tol
    evals = 0
    for _ in range(cfg.refine_iters):
        if hi - lo <= cfg.phi_tol and max(s_lo, -s_hi) * (hi - lo) <= cfg.tol:
            break
        mid = 0.5 * (lo + hi)
        s_mid = slope(mid)
        evals += 1
        if s_mid > 0:
            lo, s_lo = mid, s_mid
        else:
            hi, s_hi = mid, s_mid
    return 0.5 * (lo + hi), evals


def _golden_max(f, lo, hi, cfg):
    x1 = hi - _INV_GOLDEN * (hi - lo)
    x2 = lo + _INV_GOLDEN * (hi - lo)
    f1, f2 = f(x1), f(x2)
    evals = 2
    for _ in range(cfg.refine_iters):
        if hi - lo <= cfg.phi_tol:
            break
        if f1 >= f2:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - _INV_GOLDEN * (hi - lo)
            f1 = f(x1)
        else:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + _INV_GOLDEN * (hi - lo)
            f2 = f(x2)
        evals += 1
    return (x1 if f1 >= f2 else x2), evals


def optimal_phase_general(params: BetaParams | int, p: PolarForm, cfg: OptimizerConfig | None = None) -> OptimizationResult:
    """Global maximizer over ``phi in [-pi, pi]`` of the one-step target probability.

    A uniform scan finds the best basin; the bracket around the best probe is
    then refined by bisection on the analytic slope. ``phi = pi`` and
    ``phi = 0`` are always among the candidates, so the result never does worse
    than the classical phase. When ``theta`` is 0 or pi the objective is even in
    ``phi`` and the non-negative representative is returned.
    """
    params = as_params(params)
    cfg = cfg or OptimizerConfig()
    n, alpha, theta = params.n_size, p.alpha, p.theta

    def f(x):
        return _closed_form(n, alpha, theta, x)

    def slope(x):
        return _closed_form_slope(n, alpha, theta, x)

    symmetric = theta == 0.0 or theta == math.pi
    m = cfg.scan_points
    if symmetric:
        grid = np.linspace(0.0, math.pi, m // 2 + 1)
    else:
        grid = -math.pi + 2.0 * math.pi * np.arange(m) / m
    h = grid[1] - grid[0]
    vals = f(grid)
    evals = grid.size
    i = int(np.argmax(vals))
    lo, hi = grid[i] - h, grid[i] + h
    if symmetric:
        lo, hi = max(lo, 0.0), min(hi, math.pi)

    s_lo, s_hi = float(slope(lo)), float(slope(hi))
    evals += 2
    if s_lo > 0 > s_hi:
        x, k = _bisect_slope(slope, lo, hi, s_lo, s_hi, cfg)
    else:
        x, k = _golden_max(f, lo, hi, cfg)
    evals += k

    best_phi, best_val = math.pi, float(f(math.pi))
    p_pi = best_val
    for cand in (0.0, float(grid[i]), x):
        cand = abs(wrap_phase(cand)) if symmetric else wrap_phase(cand)
        val = float(f(cand))
        if val > best_val:
            best_phi, best_val = cand, val
    evals += 4
    p_opt = as_probability(best_val)
    p_pi = as_probability(p_pi)
    return OptimizationResult(best_phi, p_opt, p_pi, p_opt - p_pi, evals, None)


def rough_phase_estimate(p: PolarForm) -> float:
    """Approximate optimal phase ``pi - theta`` (``-pi - theta`` for negative theta).

    ``theta = 0`` maps to ``pi``, the classical phase.
    """
    if p.theta > 0:
        return math.pi - p.theta
    if p.theta < 0:
        return -math.pi - p.theta
    return math.pi


def threshold_probability(params: BetaParams | int) -> float:
    """Target probability below which ``phi = pi`` stays optimal from a real start."""
    params = as_params(params)
    n = float(params.n_size)
    return 0.5 * (1.0 + (n - 6.0) / math.sqrt(n * n - 8.0 * n + 32.0))


def threshold_complement(params: BetaParams | int) -> float:
    """``1 - threshold_probability`` without the cancellation at large N."""
    params = as_params(params)
    n = float(params.n_size)
    y = math.sqrt(n * n - 8.0 * n + 32.0)
    return 2.0 * (n - 1.0) / (y * (y + n - 6.0))
