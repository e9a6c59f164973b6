"""Per-petal member counts of a witness against the claimed petal lower bound."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from constructions import petal_lower_bound
from domination import PairedSet
from flower import Graph, Petal

from .errors import SolverError
from .results import SolveResult


@dataclass(frozen=True, slots=True)
class PetalRow:
    petal: int
    count: int
    bound: int

    @property
    def violated(self) -> bool:
        return self.count < self.bound


@dataclass(frozen=True, slots=True)
class LowerBoundReport:
    k: int
    bound: int
    rows: tuple[PetalRow, ...]

    @property
    def violations(self) -> tuple[int, ...]:
        """Petal indices whose interior holds fewer members than the bound."""
        return tuple(row.petal for row in self.rows if row.violated)

    @property
    def holds(self) -> bool:
        return not self.violations

    def to_payload(self) -> dict[str, Any]:
        return {
            "k": self.k,
            "bound": self.bound,
            "counts": [row.count for row in self.rows],
            "violations": list(self.violations),
        }


def petal_counts(g: Graph, paired_set: PairedSet) -> tuple[int, ...]:
    """|D ∩ V_i| for each petal interior V_i, i = 1..n."""
    counts = [0] * g.params.n
    for vertex in paired_set.members:
        if isinstance(vertex, Petal):
            counts[vertex.i - 1] += 1
    return tuple(counts)


def lower_bound_report(g: Graph, result: SolveResult | PairedSet, k: int) -> LowerBoundReport:
    if isinstance(result, SolveResult):
        if not result.proven or result.witness is None:
            raise SolverError("a lower-bound report needs a proven result with a witness.")
        paired_set = result.witness
    else:
        paired_set = result

    bound = petal_lower_bound(g.params.m, k)
    rows = tuple(
        PetalRow(petal=i, count=count, bound=bound)
        for i, count in enumerate(petal_counts(g, paired_set), start=1)
    )
    return LowerBoundReport(k=k, bound=bound, rows=rows)
