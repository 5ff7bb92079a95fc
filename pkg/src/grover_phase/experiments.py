"""Parameter sweeps, trajectories, threshold tables and oracle verification runs.

Every routine here is deterministic for fixed arguments (and seed), and the
CSV writer prints floats with 17 significant digits so that repeated runs are
byte-identical.
"""
from __future__ import annotations

import csv
import math
from dataclasses import astuple, dataclass, field, fields
from typing import IO, Iterable, Iterator

import numpy as np

from .amplitude import BetaParams, ComplexPair, PolarForm, as_params, hadamard_init, polar_decompose, wrap_phase
from .errors import DomainError
from .grover_map import apply_step, iteration_matrix
from .optimizer import (
    OptimizerConfig,
    classify_region,
    optimal_phase_general,
    region_boundaries,
    rough_phase_estimate,
    threshold_complement,
    threshold_probability,
)
from .statevector import verify_reduction

#: Trajectories stop once the target probability is this close to 1.
STOP_GAP = 1e-12
#: Relative phases larger than this make a trajectory state count as complex.
REAL_THETA_TOL = 1e-9
#: Pass bound on the probability discrepancy of a verification run.
VERIFY_BOUND = 1e-10


def _fmt(x) -> str:
    if isinstance(x, (bool, np.bool_)):
        return str(bool(x)).lower()
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    if isinstance(x, (float, np.floating)):
        return format(float(x), ".17g")
    return str(x)


def write_csv(rows: Iterable, out: IO[str], header: Iterable[str] | None = None) -> int:
    """Write dataclass rows as CSV; returns the number of data rows."""
    rows = iter(rows)
    writer = csv.writer(out, lineterminator="\n")
    count = 0
    for row in rows:
        if count == 0:
            writer.writerow(header or [f.name for f in fields(row)])
        writer.writerow([_fmt(x) for x in astuple(row)])
        count += 1
    return count


# -- sweep -----------------------------------------------------------------

@dataclass(frozen=True)
class SweepSpec:
    n_size: int = 2**10
    alpha_points: int = 100
    theta_points: int = 100
    optimizer: OptimizerConfig = field(default_factory=OptimizerConfig)

    def __post_init__(self):
        as_params(self.n_size)
        if self.alpha_points < 2 or self.theta_points < 2:
            raise DomainError("grid counts must be at least 2")

    def alphas(self) -> np.ndarray:
        return np.linspace(0.0, math.pi / 2, self.alpha_points)

    def thetas(self) -> np.ndarray:
        # uniform over (-pi, pi]; an even count puts theta = 0 on the grid
        k = np.arange(1, self.theta_points + 1)
        t = -math.pi + 2.0 * math.pi * k / self.theta_points
        t[-1] = math.pi
        if self.theta_points % 2 == 0:
            t[self.theta_points // 2 - 1] = 0.0
        return t


@dataclass(frozen=True)
class SweepRow:
    alpha: float
    theta: float
    phi_opt: float
    p_opt: float
    p_pi: float
    improvement: float
    phi_rough: float
    rough_deviation: float


def sweep(spec: SweepSpec) -> Iterator[SweepRow]:
    """Optimal phase over an ``alpha x theta`` grid, alpha outer and theta inner."""
    params = BetaParams(spec.n_size)
    thetas = spec.thetas()
    for alpha in spec.alphas():
        for theta in thetas:
            p = PolarForm(float(alpha), float(theta))
            res = optimal_phase_general(params, p, spec.optimizer)
            rough = rough_phase_estimate(p)
            yield SweepRow(
                p.alpha, p.theta, res.phi_opt, res.p_opt, res.p_pi, res.improvement,
                rough, wrap_phase(res.phi_opt - rough),
            )


# -- trajectory ------------------------------------------------------------

@dataclass(frozen=True)
class TrajectoryRecord:
    """State after ``step`` iterations and the phase the strategy picks for it."""

    step: int
    phi_used: float
    p_target: float
    alpha: float
    theta: float
    region: str


def parse_strategy(strategy: str) -> tuple[str, float | None]:
    name, _, arg = strategy.partition(":")
    if name in ("classical", "optimal", "rough") and not arg:
        return name, None
    if name == "fixed" and arg:
        try:
            value = float(arg)
        except ValueError:
            raise DomainError(f"bad fixed phase {arg!r}") from None
        if not math.isfinite(value):
            raise DomainError(f"bad fixed phase {arg!r}")
        return name, wrap_phase(value)
    raise DomainError(f"unknown strategy {strategy!r}; use classical, optimal, rough or fixed:<phi>")


def region_label(params: BetaParams, p: PolarForm) -> str:
    if abs(p.theta) > REAL_THETA_TOL:
        return "complex"
    if p.alpha == 0.0:
        return "R1"
    if p.alpha == math.pi / 2:
        return "R3"
    return classify_region(params, p.alpha).region


def trajectory(
    n_size: int,
    strategy: str = "optimal",
    max_steps: int = 32,
    cfg: OptimizerConfig | None = None,
    start: ComplexPair | None = None,
) -> Iterator[TrajectoryRecord]:
    """Iterate from the uniform state (or ``start``), choosing each phase by ``strategy``.

    Stops after ``max_steps`` iterations or once the target probability is
    within ``STOP_GAP`` of 1; the final state is always emitted.
    """
    params = BetaParams(n_size)
    kind, fixed = parse_strategy(strategy)
    if max_steps < 1:
        raise DomainError("max_steps must be at least 1")
    cfg = cfg or OptimizerConfig()
    v = start if start is not None else hadamard_init(params)
    for step in range(max_steps + 1):
        p = polar_decompose(v)
        if kind == "classical":
            phi = math.pi
        elif kind == "fixed":
            phi = fixed
        elif kind == "rough":
            phi = rough_phase_estimate(p)
        else:
            phi = optimal_phase_general(params, p, cfg).phi_opt
        yield TrajectoryRecord(step, phi, v.p_target, p.alpha, p.theta, region_label(params, p))
        if step == max_steps or v.p_target >= 1.0 - STOP_GAP:
            return
        v = apply_step(iteration_matrix(params, phi), v)


# -- threshold table -------------------------------------------------------

@dataclass(frozen=True)
class ThresholdRow:
    n: int
    boundary_low: float
    boundary_high: float
    p_threshold: float
    n_times_complement: float


def threshold_table(n_list: Iterable[int]) -> list[ThresholdRow]:
    rows = []
    for n in n_list:
        params = BetaParams(n)
        low, high = region_boundaries(params)
        rows.append(ThresholdRow(
            params.n_size, low, high, threshold_probability(params),
            params.n_size * threshold_complement(params),
        ))
    return rows


# -- statevector verification ---------------------------------------------

@dataclass(frozen=True)
class VerifyRow:
    n_qubits: int
    samples: int
    max_discrepancy: float
    max_leakage: float
    max_amplitude_error: float


@dataclass(frozen=True)
class VerifyRun:
    rows: list[VerifyRow]
    seed: int

    @property
    def max_discrepancy(self) -> float:
        return max(r.max_discrepancy for r in self.rows)

    @property
    def passed(self) -> bool:
        return self.max_discrepancy <= VERIFY_BOUND

    def report(self) -> str:
        lines = [f"# seed={self.seed} bound={_fmt(VERIFY_BOUND)}"]
        lines.append("n_qubits,samples,max_discrepancy,max_leakage,max_amplitude_error")
        lines += [",".join(_fmt(x) for x in astuple(r)) for r in self.rows]
        lines.append(f"max_discrepancy={_fmt(self.max_discrepancy)}")
        lines.append("status=" + ("PASS" if self.passed else "FAIL"))
        return "\n".join(lines) + "\n"


def random_pair(rng: np.random.Generator) -> ComplexPair:
    z = rng.normal(size=2) + 1j * rng.normal(size=2)
    return ComplexPair.from_array(z / np.linalg.norm(z))


def verify_sweep(n_qubits_max: int = 10, samples: int = 100, seed: int = 0, phi: float | None = None) -> VerifyRun:
    """Random ``(tau, phi, reduced pair)`` checks for every ``n = 2 .. n_qubits_max``."""
    if n_qubits_max < 2:
        raise DomainError("n_qubits_max must be at least 2")
    if samples < 1:
        raise DomainError("samples must be at least 1")
    rng = np.random.default_rng(seed)
    rows = []
    for n in range(2, n_qubits_max + 1):
        disc = leak = amp = 0.0
        for _ in range(samples):
            tau = int(rng.integers(2**n))
            angle = float(rng.uniform(-math.pi, math.pi)) if phi is None else phi
            rep = verify_reduction(n, tau, angle, random_pair(rng))
            disc, leak, amp = max(disc, rep.discrepancy), max(leak, rep.leakage), max(amp, rep.amplitude_error)
        rows.append(VerifyRow(n, samples, disc, leak, amp))
    return VerifyRun(rows, seed)
