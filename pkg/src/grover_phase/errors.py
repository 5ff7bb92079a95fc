"""Exception types raised by the package."""


class GroverPhaseError(Exception):
    """Base class for all errors raised here."""


class DomainError(GroverPhaseError, ValueError):
    """An argument lies outside the domain of the operation."""


class DegenerateAlphaError(DomainError):
    """alpha is 0 or pi/2, where the real-vector quadratic collapses to a line."""


class OutsideRegionError(DomainError):
    """phi_max was requested for an alpha that is not in the middle region."""


class ConsistencyError(GroverPhaseError, ArithmeticError):
    """A computed probability left [0, 1] by more than rounding noise."""


class ConstructionError(GroverPhaseError, RuntimeError):
    """The full-space iterate leaked out of the two-dimensional symmetric subspace."""
