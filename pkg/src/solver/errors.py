"""Solver error hierarchy."""


class SolverError(Exception):
    """Base exception for exact minimum searches."""


class InstanceTooLargeError(SolverError, ValueError):
    """Raised when a graph exceeds the vertex cap of the solve budget."""


class BudgetError(SolverError, ValueError):
    """Raised when a solve budget holds non-positive limits."""


class WitnessError(SolverError):
    """Raised when a search result fails re-verification."""
