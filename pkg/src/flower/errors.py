"""Flower-graph error hierarchy."""


class FlowerError(Exception):
    """Base exception for flower-graph construction and lookup."""


class ParameterDomainError(FlowerError, ValueError):
    """Raised when (n, m) lies outside n, m >= 3."""


class UnknownVertexError(FlowerError, KeyError):
    """Raised when a vertex does not belong to the graph being queried."""

    def __str__(self) -> str:
        # KeyError quotes its argument; keep the message readable.
        return str(self.args[0]) if self.args else ""


class VertexFormatError(FlowerError, ValueError):
    """Raised when a vertex name is not of the form `u<i>` or `v<i>.<j>`."""
