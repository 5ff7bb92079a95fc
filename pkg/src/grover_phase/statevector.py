"""Full ``N = 2**n`` dimensional generalized Grover operators.

This is the brute-force side of the two-dimensional reduction: nothing here
uses the reduced iteration matrix. Diagonal phase oracles act index-wise and
the sign matrix ``F`` is applied with a fast Walsh-Hadamard transform; the
dense ``F`` is available for cross-checks at small ``n``.

With ``W(phi) = F I^phi_{|0>} F`` the full iterate is taken as
``G(phi) = -W(phi) I^phi_{|tau>}``. The leading minus sign makes its
restriction to span{|tau>, |a>} coincide entry for entry with the reduced
matrix, including the ``-I`` at ``phi = 0``.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .amplitude import ComplexPair, as_params
from .errors import ConstructionError, DomainError
from .grover_map import apply_step, iteration_matrix

MAX_QUBITS = 14
LEAKAGE_TOL = 1e-10


def _check_qubits(n_qubits: int) -> int:
    n_qubits = int(n_qubits)
    if not 1 <= n_qubits <= MAX_QUBITS:
        raise DomainError(f"n_qubits must lie in [1, {MAX_QUBITS}], got {n_qubits}")
    return n_qubits


def _check_index(n_qubits: int, tau: int) -> int:
    tau = int(tau)
    if not 0 <= tau < 2**n_qubits:
        raise DomainError(f"target index {tau} out of range for {n_qubits} qubits")
    return tau


@dataclass(frozen=True, eq=False)
class StateVector:
    amplitudes: np.ndarray
    n_qubits: int

    def __post_init__(self):
        amps = np.asarray(self.amplitudes, dtype=complex).reshape(-1)
        if amps.size != 2**self.n_qubits:
            raise DomainError(f"expected {2**self.n_qubits} amplitudes, got {amps.size}")
        norm2 = float(np.vdot(amps, amps).real)
        if abs(norm2 - 1.0) > 1e-12:
            raise DomainError(f"state is not normalized: |a|^2 = {norm2!r}")
        object.__setattr__(self, "amplitudes", amps)

    @property
    def probabilities(self) -> np.ndarray:
        return np.abs(self.amplitudes) ** 2


@dataclass(frozen=True)
class SymmetricEmbedding:
    """A reduced pair lifted to the full space: ``v_tau`` on ``tau`` and
    ``v_a / sqrt(N - 1)`` on every other index."""

    target_index: int
    reduced: ComplexPair

    def state(self, n_qubits: int) -> StateVector:
        n_qubits = _check_qubits(n_qubits)
        tau = _check_index(n_qubits, self.target_index)
        size = 2**n_qubits
        amps = np.full(size, self.reduced.v_a / math.sqrt(size - 1), dtype=complex)
        amps[tau] = self.reduced.v_tau
        return StateVector(amps, n_qubits)


def project_symmetric(state: StateVector, tau: int) -> tuple[complex, complex, float]:
    """Coefficients on ``|tau>`` and ``|a>`` plus the norm of what lies outside their span."""
    amps = state.amplitudes
    size = amps.size
    rest = np.delete(amps, tau)
    c_tau = complex(amps[tau])
    c_a = complex(rest.sum() / math.sqrt(size - 1))
    leak = rest - c_a / math.sqrt(size - 1)
    return c_tau, c_a, float(np.linalg.norm(leak))


@dataclass(frozen=True)
class PhaseOracle:
    """``I + (e^{i phi} - 1)|tau><tau|``: multiplies one amplitude by ``e^{i phi}``."""

    n_qubits: int
    tau: int
    phi: float

    def __call__(self, amps: np.ndarray) -> np.ndarray:
        out = np.array(amps, dtype=complex)
        out[self.tau] *= cmath.exp(1j * self.phi)
        return out

    def dense(self) -> np.ndarray:
        d = np.ones(2**self.n_qubits, dtype=complex)
        d[self.tau] = cmath.exp(1j * self.phi)
        return np.diag(d)


def phase_oracle(n_qubits: int, tau: int, phi: float) -> PhaseOracle:
    n_qubits = _check_qubits(n_qubits)
    return PhaseOracle(n_qubits, _check_index(n_qubits, tau), float(phi))


def fourier_sign_matrix(n_qubits: int) -> np.ndarray:
    """Dense ``2^{-n/2} (-1)^{popcount(i & j)}``.

    Costs ``8 * 4**n`` bytes, so anything past ~12 qubits is better served by
    :func:`walsh_hadamard`.
    """
    n_qubits = _check_qubits(n_qubits)
    idx = np.arange(2**n_qubits, dtype=np.uint32)
    parity = np.bitwise_count(idx[:, None] & idx[None, :]) & 1
    return (1.0 - 2.0 * parity) / 2.0 ** (n_qubits / 2)


def walsh_hadamard(amps: np.ndarray) -> np.ndarray:
    """Apply the sign matrix to a length ``2**n`` vector in ``O(n 2**n)``."""
    amps = np.asarray(amps, dtype=complex)
    n_qubits = amps.size.bit_length() - 1
    if amps.size != 1 << n_qubits:
        raise DomainError(f"length {amps.size} is not a power of two")
    y = amps.reshape((2,) * n_qubits)
    for axis in range(n_qubits):
        a = np.take(y, 0, axis=axis)
        b = np.take(y, 1, axis=axis)
        y = np.stack((a + b, a - b), axis=axis)
    return y.reshape(-1) / 2.0 ** (n_qubits / 2)


@dataclass(frozen=True)
class GroverIterate:
    n_qubits: int
    tau: int
    phi: float

    def __call__(self, amps: np.ndarray) -> np.ndarray:
        shift = cmath.exp(1j * self.phi)
        out = np.array(amps, dtype=complex)
        out[self.tau] *= shift
        out = walsh_hadamard(out)
        out[0] *= shift
        return -walsh_hadamard(out)

    def apply(self, state: StateVector) -> StateVector:
        return StateVector(self(state.amplitudes), state.n_qubits)

    def dense(self) -> np.ndarray:
        f = fourier_sign_matrix(self.n_qubits)
        zero = phase_oracle(self.n_qubits, 0, self.phi).dense()
        target = phase_oracle(self.n_qubits, self.tau, self.phi).dense()
        return -(f @ zero @ f @ target)


def grover_iterate_full(n_qubits: int, tau: int, phi: float) -> GroverIterate:
    n_qubits = _check_qubits(n_qubits)
    return GroverIterate(n_qubits, _check_index(n_qubits, tau), float(phi))


@dataclass(frozen=True)
class VerificationReport:
    n_qubits: int
    tau: int
    phi: float
    discrepancy: float
    leakage: float
    amplitude_error: float


def verify_reduction(n_qubits: int, tau: int, phi: float, reduced: ComplexPair) -> VerificationReport:
    """Compare one full-space iterate against one reduced step.

    ``discrepancy`` is the largest difference between the two routes in the
    squared moduli of the ``|tau>`` and ``|a>`` components. ``amplitude_error``
    compares the raw amplitudes and is zero up to rounding under the sign
    convention above.
    """
    g = grover_iterate_full(n_qubits, tau, phi)
    start = SymmetricEmbedding(g.tau, reduced).state(g.n_qubits)
    c_tau, c_a, leak = project_symmetric(g.apply(start), g.tau)
    if leak > LEAKAGE_TOL:
        raise ConstructionError(f"iterate leaked {leak:.3e} out of span{{|tau>, |a>}}")
    out = apply_step(iteration_matrix(as_params(2**g.n_qubits), g.phi), reduced)
    discrepancy = max(abs(abs(c_tau) ** 2 - abs(out.v_tau) ** 2), abs(abs(c_a) ** 2 - abs(out.v_a) ** 2))
    amp_err = max(abs(c_tau - out.v_tau), abs(c_a - out.v_a))
    return VerificationReport(g.n_qubits, g.tau, g.phi, discrepancy, leak, amp_err)
