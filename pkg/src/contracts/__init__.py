"""Shared cross-module contracts: worker IPC envelopes and CLI exit codes."""

from contracts.exit_codes import ExitCode
from contracts.ipc import _RequestEnvelope, _ResponseEnvelope


class CommandError(Exception):
    """Raised by a CLI command that must stop with a specific exit code."""

    def __init__(self, message: str, *, exit_code: ExitCode = ExitCode.FAILURE) -> None:
        super().__init__(message)
        self.exit_code = exit_code


__all__ = [
    "CommandError",
    "ExitCode",
    "_RequestEnvelope",
    "_ResponseEnvelope",
]
