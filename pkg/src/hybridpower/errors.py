"""Semantic exception hierarchy shared across the package."""


class HybridPowerError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInputError(HybridPowerError, ValueError):
    """Inputs violate a documented contract (domain, range, or type)."""


class DegenerateConditionalError(HybridPowerError, ValueError):
    """The prior carries (numerically) no mass above the conditioning threshold."""


class InfeasibleCriterionError(HybridPowerError):
    """No sample size can meet the criterion (e.g. a success-probability target
    at or above the a-priori probability of a relevant effect)."""

    def __init__(self, message: str, bound: float | None = None):
        super().__init__(message)
        self.bound = bound


class SampleSizeCapError(HybridPowerError):
    """The criterion is still unmet at the search cap n_max."""

    def __init__(self, message: str, n_max: int, achieved: float):
        super().__init__(message)
        self.n_max = n_max
        self.achieved = achieved
