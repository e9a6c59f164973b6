"""Process exit codes shared by every CLI command."""

from __future__ import annotations

from enum import IntEnum


class ExitCode(IntEnum):
    OK = 0
    FAILURE = 1
    USAGE = 2
    REPAIR_FAILED = 3
    IO_ERROR = 4
