"""Public configuration API."""

from .loader import default_thread_count, load_solver_settings
from .parser import parse_solver_settings
from .schema import AppConfigurationError, SolverSettings

__all__ = [
    "AppConfigurationError",
    "SolverSettings",
    "default_thread_count",
    "load_solver_settings",
    "parse_solver_settings",
]
