"""Default solver limits reused by config parsing and the CLI."""

from __future__ import annotations

DEFAULT_TIME_LIMIT_SECONDS = 60.0
DEFAULT_MAX_VERTICES = 30
DEFAULT_THREADS = 1

# Extra seconds a worker process gets beyond the search deadline before it is presumed hung.
WORKER_GRACE_SECONDS = 10.0
