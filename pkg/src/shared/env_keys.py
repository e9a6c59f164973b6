"""Canonical environment variable names used by configuration loading."""

from __future__ import annotations

ENV_THREADS = "FLOWERDOM_THREADS"
ENV_TIME_LIMIT = "FLOWERDOM_TIME_LIMIT"
ENV_MAX_VERTICES = "FLOWERDOM_MAX_VERTICES"
ENV_FULL_SWEEP = "FLOWERDOM_FULL_SWEEP"
