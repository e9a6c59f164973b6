"""Pair classification by endpoint degree and per-pair coverage."""

from __future__ import annotations

from dataclasses import dataclass

from flower import Graph, Vertex

from .paired_set import PairedSet


@dataclass(frozen=True, slots=True)
class PairClassification:
    """Pair counts: vv (both degree 2), uu (both degree 4), vu (mixed)."""

    vv: int
    uu: int
    vu: int

    @property
    def total(self) -> int:
        return self.vv + self.uu + self.vu

    def to_payload(self) -> dict[str, int]:
        return {"vv": self.vv, "uu": self.uu, "vu": self.vu}


def edge_type(g: Graph, a: Vertex, b: Vertex) -> tuple[int, int]:
    """Sorted degree pair of an edge, e.g. (2, 4)."""
    first, second = g.degree(a), g.degree(b)
    return (first, second) if first <= second else (second, first)


def classify_pairs(g: Graph, d: PairedSet) -> PairClassification:
    counts = {(2, 2): 0, (4, 4): 0, (2, 4): 0}
    for a, b in d.pairing:
        counts[edge_type(g, a, b)] += 1
    return PairClassification(vv=counts[(2, 2)], uu=counts[(4, 4)], vu=counts[(2, 4)])


def pair_coverage(g: Graph, pair: tuple[Vertex, Vertex], k: int) -> int:
    """Number of vertices within distance k of either endpoint, endpoints included."""
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}.")
    a, b = pair
    return len(g.covered_indices((g.index(a), g.index(b)), k))
