"""Reduced amplitude vectors for single-target amplitude amplification.

All non-target basis states move together under the generalized Grover
iterate, so the state collapses to two complex numbers: the amplitude of the
target ``|tau>`` and the amplitude of the normalized uniform superposition of
the remaining ``N - 1`` states.
"""
from __future__ import annotations

import math
import numbers
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError

#: Largest deviation of ``|v_tau|^2 + |v_a|^2`` from 1 that is silently repaired.
NORM_TOL = 1e-9


def wrap_phase(x: float) -> float:
    """Map an angle to ``(-pi, pi]``."""
    y = math.remainder(float(x), 2.0 * math.pi)
    return math.pi if y <= -math.pi else y


def wrap_phase_array(x) -> np.ndarray:
    """Vectorized :func:`wrap_phase` (loses a few ulps relative to the scalar form)."""
    y = np.mod(np.asarray(x, dtype=float) + np.pi, 2.0 * np.pi) - np.pi
    return np.where(y <= -np.pi, np.pi, y)


@dataclass(frozen=True)
class BetaParams:
    """Database size ``N`` with the derived ``sin(beta) = 1/sqrt(N)`` quantities."""

    n_size: int
    sin_beta: float = field(init=False)
    cos_beta: float = field(init=False)
    sin_2beta: float = field(init=False)
    cos_2beta: float = field(init=False)

    def __post_init__(self):
        n = self.n_size
        if isinstance(n, bool) or not isinstance(n, numbers.Integral):
            raise DomainError(f"N must be an integer, got {n!r}")
        n = int(n)
        if n < 2:
            raise DomainError(f"N must be at least 2, got {n}")
        root = math.sqrt(n - 1)
        object.__setattr__(self, "n_size", n)
        object.__setattr__(self, "sin_beta", 1.0 / math.sqrt(n))
        object.__setattr__(self, "cos_beta", math.sqrt((n - 1) / n))
        object.__setattr__(self, "sin_2beta", 2.0 * root / n)
        object.__setattr__(self, "cos_2beta", (n - 2) / n)

    @classmethod
    def from_qubits(cls, n_qubits: int) -> BetaParams:
        if n_qubits < 1:
            raise DomainError(f"need at least one qubit, got {n_qubits}")
        return cls(2 ** int(n_qubits))

    @property
    def beta(self) -> float:
        return math.atan2(1.0, math.sqrt(self.n_size - 1))


def as_params(params: BetaParams | int) -> BetaParams:
    return params if isinstance(params, BetaParams) else BetaParams(params)


@dataclass(frozen=True)
class ComplexPair:
    """Normalized ``(target, rest)`` amplitude pair.

    Inputs whose squared norm is within ``NORM_TOL`` of 1 are rescaled onto the
    unit sphere; anything further off raises :class:`DomainError`.
    """

    v_tau: complex
    v_a: complex

    def __post_init__(self):
        t, a = complex(self.v_tau), complex(self.v_a)
        if not all(math.isfinite(x) for x in (t.real, t.imag, a.real, a.imag)):
            raise DomainError("amplitudes must be finite")
        norm2 = abs(t) ** 2 + abs(a) ** 2
        if abs(norm2 - 1.0) > NORM_TOL:
            raise DomainError(f"amplitude pair is not normalized: |v|^2 = {norm2!r}")
        if norm2 != 1.0:
            s = 1.0 / math.sqrt(norm2)
            t, a = t * s, a * s
        object.__setattr__(self, "v_tau", t)
        object.__setattr__(self, "v_a", a)

    @classmethod
    def from_array(cls, v) -> ComplexPair:
        v = np.asarray(v, dtype=complex).reshape(-1)
        if v.shape != (2,):
            raise DomainError(f"expected two amplitudes, got shape {v.shape}")
        return cls(complex(v[0]), complex(v[1]))

    def as_array(self) -> np.ndarray:
        return np.array([self.v_tau, self.v_a], dtype=complex)

    @property
    def p_target(self) -> float:
        return abs(self.v_tau) ** 2

    @property
    def is_real(self) -> bool:
        return self.v_tau.imag == 0.0 and self.v_a.imag == 0.0


@dataclass(frozen=True)
class PolarForm:
    """``(alpha, theta)`` with the pair equal to ``(sin(alpha) e^{i theta}, cos(alpha))``
    up to a global phase. ``alpha`` lies in ``[0, pi/2]`` and ``theta`` in ``(-pi, pi]``."""

    alpha: float
    theta: float = 0.0

    def __post_init__(self):
        alpha, theta = float(self.alpha), float(self.theta)
        if not (0.0 <= alpha <= math.pi / 2):
            raise DomainError(f"alpha must lie in [0, pi/2], got {alpha!r}")
        if not (-math.pi < theta <= math.pi):
            raise DomainError(f"theta must lie in (-pi, pi], got {theta!r}")
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "theta", theta)

    @property
    def p_target(self) -> float:
        return math.sin(self.alpha) ** 2


def hadamard_init(params: BetaParams | int) -> ComplexPair:
    """Reduced amplitudes of the uniform superposition: ``(1/sqrt(N), sqrt((N-1)/N))``."""
    params = as_params(params)
    return ComplexPair(params.sin_beta, params.cos_beta)


def polar_decompose(v: ComplexPair) -> PolarForm:
    """Factor out the phase of the non-target amplitude.

    When either amplitude vanishes the relative phase is undefined and
    ``theta = 0`` is returned.
    """
    if not isinstance(v, ComplexPair):
        v = ComplexPair.from_array(v)
    r_tau, r_a = abs(v.v_tau), abs(v.v_a)
    # atan2 keeps full precision near alpha = pi/2 where arcsin does not
    alpha = math.atan2(r_tau, r_a)
    if r_tau == 0.0 or r_a == 0.0:
        theta = 0.0
    else:
        theta = wrap_phase(math.atan2(v.v_tau.imag, v.v_tau.real) - math.atan2(v.v_a.imag, v.v_a.real))
    return PolarForm(min(alpha, math.pi / 2), theta)


def from_polar(p: PolarForm) -> ComplexPair:
    return ComplexPair(math.sin(p.alpha) * complex(math.cos(p.theta), math.sin(p.theta)), math.cos(p.alpha))
