"""Command-line surface: gen, formula, construct, verify, solve, sweep."""

from .commands import COMMANDS, CommandContext, execute, exit_code_for
from .parser import build_parser, parse_range
from .sweep import CSV_HEADER, SweepRow, SweepSummary, run_sweep, sweep_row, write_csv

__all__ = [
    "COMMANDS",
    "CSV_HEADER",
    "CommandContext",
    "SweepRow",
    "SweepSummary",
    "build_parser",
    "execute",
    "exit_code_for",
    "parse_range",
    "run_sweep",
    "sweep_row",
    "write_csv",
]
