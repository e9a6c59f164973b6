"""Domination error hierarchy."""


class DominationError(Exception):
    """Base exception for domination checks."""


class PairedSetFormatError(DominationError, ValueError):
    """Raised when a PairedSet document does not follow the JSON schema."""
