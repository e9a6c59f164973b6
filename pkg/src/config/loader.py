"""Configuration loading from environment variables."""

from __future__ import annotations

import os
from typing import Mapping

import psutil

from shared.defaults import DEFAULT_THREADS

from .parser import parse_solver_settings
from .schema import SolverSettings


def default_thread_count() -> int:
    """Physical core count, or the single-worker default when psutil cannot tell."""
    cores = psutil.cpu_count(logical=False)
    return cores if cores and cores > 0 else DEFAULT_THREADS


def load_solver_settings(
    *,
    environ: Mapping[str, str] | None = None,
) -> SolverSettings:
    """Load solver settings from `FLOWERDOM_*` variables into `SolverSettings`."""
    env = environ if environ is not None else os.environ
    return parse_solver_settings(env, default_threads=default_thread_count())
