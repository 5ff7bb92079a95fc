"""Optimal per-step phase for the generalized (arbitrary-phase) Grover iteration."""
from .amplitude import (
    BetaParams,
    ComplexPair,
    PolarForm,
    from_polar,
    hadamard_init,
    polar_decompose,
    wrap_phase,
)
from .errors import (
    ConsistencyError,
    ConstructionError,
    DegenerateAlphaError,
    DomainError,
    GroverPhaseError,
    OutsideRegionError,
)
from .grover_map import (
    IterationMatrix,
    QuadraticCoeffs,
    apply_step,
    first_step_argmax,
    first_step_objective,
    iteration_matrix,
    quadratic_coeffs,
    target_probability_closed_form,
    target_probability_direct,
)
from .optimizer import (
    OptimizationResult,
    OptimizerConfig,
    RegionReport,
    classify_region,
    optimal_phase_general,
    optimal_phase_real,
    phi_max_closed_form,
    region_boundaries,
    rough_phase_estimate,
    threshold_complement,
    threshold_probability,
)
from .statevector import (
    StateVector,
    SymmetricEmbedding,
    fourier_sign_matrix,
    grover_iterate_full,
    phase_oracle,
    verify_reduction,
    walsh_hadamard,
)

__version__ = "0.1.0"
