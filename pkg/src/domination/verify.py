"""k-distance domination and paired-domination checks with diagnostics."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterable

from flower import Graph, Vertex

from .matching import has_perfect_matching
from .paired_set import PairedSet

EMPTY = "empty"
UNKNOWN_VERTEX = "unknown-vertex"
PARITY = "parity"
PAIR_NOT_EDGE = "pair-not-edge"
PAIR_OVERLAP = "pair-overlap"
PAIRING_MISMATCH = "pairing-mismatch"
NOT_DOMINATING = "not-dominating"

FAILURE_CODES = (
    EMPTY,
    UNKNOWN_VERTEX,
    PARITY,
    PAIR_NOT_EDGE,
    PAIR_OVERLAP,
    PAIRING_MISMATCH,
    NOT_DOMINATING,
)


def _require_distance(k: int) -> None:
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise ValueError(f"k must be an integer >= 1, got {k!r}.")


@dataclass(frozen=True, slots=True)
class Diagnostic:
    """Outcome of a paired-domination check. Truthy iff valid."""

    valid: bool
    failure: str | None = None
    witness: str | None = None
    detail: str | None = None

    def __bool__(self) -> bool:
        return self.valid

    def to_payload(self) -> dict[str, Any]:
        return {
            "valid": self.valid,
            "failure": self.failure,
            "witness": self.witness,
            "detail": self.detail,
        }


def undominated(g: Graph, d: Iterable[Vertex], k: int) -> tuple[Vertex, ...]:
    """Vertices with no member of d within distance k, in canonical order."""
    _require_distance(k)
    covered = g.covered_indices((g.index(vertex) for vertex in d), k)
    return tuple(g.vertex(index) for index in range(len(g)) if index not in covered)


def is_k_dominating(g: Graph, d: Iterable[Vertex], k: int) -> bool:
    return not undominated(g, d, k)


def is_k_paired_dominating(g: Graph, d: PairedSet, k: int) -> Diagnostic:
    _require_distance(k)
    if not d.members:
        return Diagnostic(False, EMPTY, detail="paired dominating sets are nonempty")

    listed = [*d.sorted_members(), *(vertex for pair in d.pairing for vertex in pair)]
    for vertex in listed:
        if vertex not in g:
            return Diagnostic(False, UNKNOWN_VERTEX, witness=vertex.name)

    if len(d.members) % 2:
        ordered = sorted(d.members, key=g.index)
        paired = {vertex for pair in d.pairing for vertex in pair}
        unmatched = [vertex for vertex in ordered if vertex not in paired] or ordered
        return Diagnostic(
            False,
            PARITY,
            witness=unmatched[-1].name,
            detail=f"{len(d.members)} members cannot be perfectly matched",
        )

    for a, b in d.pairing:
        if a == b or not g.has_edge(a, b):
            return Diagnostic(False, PAIR_NOT_EDGE, witness=f"{a.name}-{b.name}")

    seen: set[Vertex] = set()
    for a, b in d.pairing:
        for vertex in (a, b):
            if vertex in seen:
                return Diagnostic(False, PAIR_OVERLAP, witness=vertex.name)
            seen.add(vertex)

    if seen != d.members:
        stray = sorted(seen.symmetric_difference(d.members), key=lambda vertex: vertex.name)
        detail = None
        if has_perfect_matching(g, d.members):
            detail = "members admit a perfect matching, but not the supplied one"
        return Diagnostic(False, PAIRING_MISMATCH, witness=stray[0].name, detail=detail)

    missing = undominated(g, d.members, k)
    if missing:
        return Diagnostic(
            False,
            NOT_DOMINATING,
            witness=missing[0].name,
            detail=f"{len(missing)} vertices beyond distance {k}",
        )
    return Diagnostic(True)


