"""Construction error hierarchy."""


class ConstructionError(Exception):
    """Base exception for formula evaluation and constructive sets."""


class UnsupportedDistanceError(ConstructionError, ValueError):
    """Raised when a closed form is requested for k outside {1, 2}."""


class RepairFailedError(ConstructionError):
    """Raised when neither a literal set nor the canonical layout verifies at formula size."""
