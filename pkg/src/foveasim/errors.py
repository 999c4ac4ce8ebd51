"""Exception types shared across the toolkit."""


class FoveaSimError(ValueError):
    """Base class for all toolkit validation errors."""


class InvalidBandwidthError(FoveaSimError):
    """Bandwidth arguments out of order or non-positive."""


class InvalidBudgetError(FoveaSimError):
    """Bandwidth budget ordering violated (wac <= target <= full required)."""


class ShapeError(FoveaSimError):
    """Array dimensions do not match between operands."""


class DomainError(FoveaSimError):
    """Scalar or pixel values outside the documented domain."""


class BudgetError(FoveaSimError):
    """Requested selection exceeds the available pixel budget."""


class InfeasiblePlanError(FoveaSimError):
    """Fovea window cannot be placed inside the grid."""


class InfeasibleRateError(FoveaSimError):
    """Frame schedule does not fit the frame period.

    Carries the largest fovea count that would fit.
    """

    def __init__(self, msg, achievable_count):
        super().__init__(msg)
        self.achievable_count = achievable_count


class EmptyEvaluationError(FoveaSimError):
    """No valid ground-truth pixels to evaluate against."""


class DegenerateScaleError(FoveaSimError):
    """Median scaling undefined (zero median prediction)."""


class OutOfRangeError(FoveaSimError):
    """Requested direction exceeds the mirror's mechanical range."""
