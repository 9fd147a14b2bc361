"""Shared exception types."""


class CapExceededError(ValueError):
    """A table or enumeration request exceeded its configured cap."""


class DomainError(ValueError):
    """Argument outside the domain of a special function (e.g. Im(tau) <= 0)."""


class SingularArgumentError(ValueError):
    """Evaluation point too close to a lattice singularity."""

    def __init__(self, message, offending_index=None):
        super().__init__(message)
        self.offending_index = offending_index


class QuadratureError(RuntimeError):
    """Adaptive quadrature exhausted its refinement budget."""

    def __init__(self, message, error_estimate=float("nan")):
        super().__init__(message)
        self.error_estimate = error_estimate


class PrecisionError(RuntimeError):
    """Requested computation exceeds the dynamic range of binary64."""
