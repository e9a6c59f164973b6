"""Typed parser for `FLOWERDOM_*` environment values into solver settings."""

from __future__ import annotations

from typing import Any, Mapping

from shared.defaults import DEFAULT_MAX_VERTICES, DEFAULT_THREADS, DEFAULT_TIME_LIMIT_SECONDS
from shared.env_keys import ENV_MAX_VERTICES, ENV_THREADS, ENV_TIME_LIMIT

from .schema import AppConfigurationError, SolverSettings


def parse_solver_settings(
    environ: Mapping[str, str],
    *,
    default_threads: int = DEFAULT_THREADS,
) -> SolverSettings:
    """Read solver settings; unset or blank variables fall back to defaults."""
    threads = _optional(environ, ENV_THREADS)
    time_limit = _optional(environ, ENV_TIME_LIMIT)
    max_vertices = _optional(environ, ENV_MAX_VERTICES)

    return SolverSettings(
        threads=(
            default_threads
            if threads is None
            else _as_positive_int(threads, ENV_THREADS)
        ),
        time_limit_seconds=(
            DEFAULT_TIME_LIMIT_SECONDS
            if time_limit is None
            else _as_positive_float(time_limit, ENV_TIME_LIMIT)
        ),
        max_vertices=(
            DEFAULT_MAX_VERTICES
            if max_vertices is None
            else _as_positive_int(max_vertices, ENV_MAX_VERTICES)
        ),
    )


def _optional(environ: Mapping[str, str], key: str) -> str | None:
    value = environ.get(key, "").strip()
    return value or None


def _as_int(value: Any, field: str) -> int:
    if isinstance(value, bool):
        raise AppConfigurationError(f"{field} must be an integer.")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        try:
            return int(value.strip(), 10)
        except ValueError as error:
            raise AppConfigurationError(f"{field} must be an integer.") from error
    raise AppConfigurationError(f"{field} must be an integer.")


def _as_float(value: Any, field: str) -> float:
    if isinstance(value, (int, float)) and not isinstance(value, bool):
        return float(value)
    if isinstance(value, str):
        try:
            return float(value.strip())
        except ValueError as error:
            raise AppConfigurationError(f"{field} must be a float.") from error
    raise AppConfigurationError(f"{field} must be a float.")


def _as_positive_int(value: Any, field: str) -> int:
    number = _as_int(value, field)
    if number <= 0:
        raise AppConfigurationError(f"{field} must be > 0.")
    return number


def _as_positive_float(value: Any, field: str) -> float:
    number = _as_float(value, field)
    if not number > 0:
        raise AppConfigurationError(f"{field} must be > 0.")
    return number
