"""Solve budget and result value objects."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from domination import PairedSet
from flower import Vertex
from shared.defaults import DEFAULT_MAX_VERTICES, DEFAULT_TIME_LIMIT_SECONDS

from .errors import BudgetError

UNKNOWN = "unknown"


@dataclass(frozen=True, slots=True)
class SolveBudget:
    """Limits for one exact search: vertex cap, wall-clock seconds, optional cap on |D|."""

    max_vertices: int = DEFAULT_MAX_VERTICES
    time_limit: float = DEFAULT_TIME_LIMIT_SECONDS
    max_set_size: int | None = None

    def __post_init__(self) -> None:
        if self.max_vertices <= 0:
            raise BudgetError(f"max_vertices must be > 0, got {self.max_vertices}.")
        if self.time_limit <= 0:
            raise BudgetError(f"time_limit must be > 0, got {self.time_limit}.")
        if self.max_set_size is not None and self.max_set_size <= 0:
            raise BudgetError(f"max_set_size must be > 0, got {self.max_set_size}.")


@dataclass(frozen=True, slots=True)
class SolveResult:
    """Outcome of a minimum k-distance paired-domination search.

    When `proven` is true, `optimum` is the minimum and no smaller even size
    admits a valid set. Otherwise `optimum` is the best known upper bound, or
    None when nothing is known; `lower_bound` is the smallest size not refuted.
    """

    optimum: int | None
    witness: PairedSet | None
    nodes_explored: int
    proven: bool
    millis: int
    lower_bound: int

    def to_payload(self) -> dict[str, Any]:
        return {
            "optimum": UNKNOWN if self.optimum is None else self.optimum,
            "proven": self.proven,
            "witness": None if self.witness is None else self.witness.to_payload(),
            "nodes": self.nodes_explored,
            "millis": self.millis,
            "lower_bound": self.lower_bound,
        }


@dataclass(frozen=True, slots=True)
class DominatingSetResult:
    """Outcome of a minimum k-distance (unpaired) domination search."""

    optimum: int | None
    members: tuple[Vertex, ...]
    nodes_explored: int
    proven: bool
    millis: int

    def to_payload(self) -> dict[str, Any]:
        return {
            "optimum": UNKNOWN if self.optimum is None else self.optimum,
            "proven": self.proven,
            "members": sorted(vertex.name for vertex in self.members),
            "nodes": self.nodes_explored,
            "millis": self.millis,
        }
