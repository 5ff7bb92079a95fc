"""The generalized Grover iterate restricted to span{|tau>, |a>}.

The iterate with phase ``phi`` acts on the reduced pair ``(v_tau, v_a)`` as

    [[ e^{i phi} ((1 - e^{i phi})/N - 1),     sqrt(N-1)/N (1 - e^{i phi})     ],
     [ sqrt(N-1)/N e^{i phi} (1 - e^{i phi}), -(1/N + (1 - 1/N) e^{i phi})      ]]

At ``phi = 0`` this is ``-I``; at ``phi = pi`` it is the classical Grover
rotation by ``2 beta``.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .amplitude import BetaParams, ComplexPair, PolarForm, as_params
from .errors import ConsistencyError, DomainError

#: Probabilities this close outside [0, 1] are treated as rounding and clamped.
CLAMP_TOL = 1e-12


def as_probability(x):
    """Clamp rounding excursions outside ``[0, 1]``; raise on anything larger."""
    arr = np.asarray(x, dtype=float)
    if np.any(arr < -CLAMP_TOL) or np.any(arr > 1.0 + CLAMP_TOL) or np.any(np.isnan(arr)):
        worst = arr[(arr < -CLAMP_TOL) | (arr > 1.0 + CLAMP_TOL) | np.isnan(arr)].ravel()[0]
        raise ConsistencyError(f"probability {worst!r} outside [0, 1]")
    out = np.clip(arr, 0.0, 1.0)
    return float(out) if out.ndim == 0 else out


@dataclass(frozen=True, eq=False)
class IterationMatrix:
    entries: np.ndarray
    phi: float
    n_size: int

    def __matmul__(self, other):
        if isinstance(other, ComplexPair):
            return apply_step(self, other)
        return self.entries @ other


def iteration_matrix(params: BetaParams | int, phi: float) -> IterationMatrix:
    params = as_params(params)
    phi = float(phi)
    if not math.isfinite(phi):
        raise DomainError(f"phi must be finite, got {phi!r}")
    n = params.n_size
    k = math.sqrt(n - 1) / n
    e = cmath.exp(1j * phi)
    entries = np.array(
        [
            [e * ((1 - e) / n - 1), k * (1 - e)],
            [k * e * (1 - e), -(1 / n + (1 - 1 / n) * e)],
        ],
        dtype=complex,
    )
    return IterationMatrix(entries, phi, n)


def apply_step(m: IterationMatrix, v: ComplexPair) -> ComplexPair:
    return ComplexPair.from_array(m.entries @ v.as_array())


def target_probability_direct(params: BetaParams | int, phi, v: ComplexPair):
    """``|(A^phi v)_tau|^2`` from the matrix entries. ``phi`` may be an array."""
    params = as_params(params)
    n = params.n_size
    k = math.sqrt(n - 1) / n
    e = np.exp(1j * np.asarray(phi, dtype=float))
    amp = e * ((1 - e) / n - 1) * v.v_tau + k * (1 - e) * v.v_a
    return as_probability(np.abs(amp) ** 2)


def _closed_form(n: int, alpha, theta, phi):
    k = math.sqrt(n - 1) / n
    s2a = np.sin(2 * alpha)
    c_pt = np.cos(phi + theta)
    bracket = (k * np.cos(2 * alpha) + s2a * c_pt / n) * (1 - np.cos(phi)) - 0.5 * s2a * c_pt
    return 2 * k * bracket + k * s2a * np.cos(theta) + np.sin(alpha) ** 2


def _closed_form_slope(n: int, alpha, theta, phi):
    """d/dphi of :func:`_closed_form`."""
    k = math.sqrt(n - 1) / n
    s2a = np.sin(2 * alpha)
    s_pt, c_pt = np.sin(phi + theta), np.cos(phi + theta)
    return 2 * k * (
        -s2a * s_pt / n * (1 - np.cos(phi))
        + (k * np.cos(2 * alpha) + s2a * c_pt / n) * np.sin(phi)
        + 0.5 * s2a * s_pt
    )


def target_probability_closed_form(params: BetaParams | int, phi, p: PolarForm):
    """One-step target probability as a function of ``(N, alpha, theta, phi)``.

    Agrees with :func:`target_probability_direct` applied to ``from_polar(p)``;
    ``phi`` may be an array.
    """
    params = as_params(params)
    return as_probability(_closed_form(params.n_size, p.alpha, p.theta, np.asarray(phi, dtype=float)))


@dataclass(frozen=True)
class QuadraticCoeffs:
    """For a real input, ``P = -a_coef u^2 - b_coef u + const_coef`` with ``u = cos(phi)``."""

    a_coef: float
    b_coef: float
    const_coef: float

    def __call__(self, u):
        u = np.asarray(u, dtype=float)
        val = -self.a_coef * u * u - self.b_coef * u + self.const_coef
        return float(val) if val.ndim == 0 else val


def quadratic_coeffs(params: BetaParams | int, alpha: float) -> QuadraticCoeffs:
    params = as_params(params)
    if not (0.0 <= alpha <= math.pi / 2):
        raise DomainError(f"alpha must lie in [0, pi/2], got {alpha!r}")
    sb, cb, s2b = params.sin_beta, params.cos_beta, params.sin_2beta
    sa, ca = math.sin(alpha), math.cos(alpha)
    a_coef = sb * sb * s2b * math.sin(2 * alpha)
    b_coef = 0.5 * s2b * math.sin(2 * alpha + 2 * params.beta)
    big_b = sa * cb * cb + ca * sb * cb
    big_c = sb * sb * sa + sb * cb * ca
    return QuadraticCoeffs(a_coef, b_coef, big_b * big_b + big_c * big_c)


def first_step_objective(params: BetaParams | int, u):
    """Target probability after one step from the uniform state, as a function of ``u = cos(phi)``."""
    params = as_params(params)
    a = params.cos_2beta
    u = np.asarray(u, dtype=float)
    if np.any(np.abs(u) > 1.0):
        raise DomainError("u = cos(phi) must lie in [-1, 1]")
    val = (1 - a) / 2 * ((a * a - 1) * u * u - 2 * a * (a + 1) * u + (a + 1) ** 2 + 1)
    return as_probability(val)


def first_step_argmax(params: BetaParams | int) -> float:
    """Maximizer over ``u`` in [-1, 1] of :func:`first_step_objective`.

    The unconstrained vertex sits at ``u = 1 - N/2``, so every ``N >= 4``
    lands on the boundary ``u = -1`` (``phi = pi``) and ``N = 2`` gives ``u = 0``.
    """
    params = as_params(params)
    return max(-1.0, min(1.0, 1.0 - params.n_size / 2))
