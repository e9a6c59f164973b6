"""Dataclass schema objects used by solver configuration loading."""

from __future__ import annotations

from dataclasses import dataclass

from shared.defaults import DEFAULT_MAX_VERTICES, DEFAULT_THREADS, DEFAULT_TIME_LIMIT_SECONDS


class AppConfigurationError(Exception):
    """Raised when environment or flag configuration is invalid."""


@dataclass(frozen=True)
class SolverSettings:
    """Solver limits from `FLOWERDOM_*` variables, before CLI flag overrides."""
    threads: int = DEFAULT_THREADS
    time_limit_seconds: float = DEFAULT_TIME_LIMIT_SECONDS
    max_vertices: int = DEFAULT_MAX_VERTICES
