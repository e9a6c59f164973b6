"""Exact minimum k-distance (paired) domination for small flower graphs."""

from .errors import BudgetError, InstanceTooLargeError, SolverError, WitnessError
from .exhaustive import EXHAUSTIVE_VERTEX_LIMIT, exhaustive_min_paired
from .report import LowerBoundReport, PetalRow, lower_bound_report, petal_counts
from .results import UNKNOWN, DominatingSetResult, SolveBudget, SolveResult
from .search import BranchAndBound, SearchTables, SubtreeOutcome, SubtreeTask, build_tables
from .service import min_distance_domination, min_paired_domination
from .workers import (
    SearchWorkerPool,
    WorkerCallTimeoutError,
    WorkerClosedError,
    WorkerCrashError,
    WorkerError,
    WorkerInitError,
    WorkerTaskError,
)

__all__ = [
    "BranchAndBound",
    "BudgetError",
    "DominatingSetResult",
    "EXHAUSTIVE_VERTEX_LIMIT",
    "InstanceTooLargeError",
    "LowerBoundReport",
    "PetalRow",
    "SearchTables",
    "SearchWorkerPool",
    "SolveBudget",
    "SolveResult",
    "SolverError",
    "SubtreeOutcome",
    "SubtreeTask",
    "UNKNOWN",
    "WitnessError",
    "WorkerCallTimeoutError",
    "WorkerClosedError",
    "WorkerCrashError",
    "WorkerError",
    "WorkerInitError",
    "WorkerTaskError",
    "build_tables",
    "exhaustive_min_paired",
    "lower_bound_report",
    "min_distance_domination",
    "min_paired_domination",
    "petal_counts",
]
