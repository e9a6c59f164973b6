"""Maximum matching on induced subgraphs of a flower graph."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable

import networkx as nx

from flower import Graph, Vertex

EXHAUSTIVE_LIMIT = 16


def _indices(g: Graph, s: Iterable[Vertex]) -> list[int]:
    return sorted({g.index(vertex) for vertex in s})


def max_matching(g: Graph, s: Iterable[Vertex]) -> list[tuple[Vertex, Vertex]]:
    """Maximum-cardinality matching of <s> (Edmonds blossom, odd cycles allowed)."""
    indices = _indices(g, s)
    if len(indices) < 2:
        return []
    induced = g.nx_graph.subgraph(indices)
    matching = nx.max_weight_matching(induced, maxcardinality=True)
    pairs = sorted((min(a, b), max(a, b)) for a, b in matching)
    return [(g.vertex(a), g.vertex(b)) for a, b in pairs]


def has_perfect_matching(g: Graph, s: Iterable[Vertex]) -> bool:
    members = set(s)
    if len(members) % 2:
        return False
    if not members:
        return True
    return 2 * len(max_matching(g, members)) == len(members)


def exhaustive_matching_size(g: Graph, s: Iterable[Vertex]) -> int:
    """Matching number of <s> by bitmask recursion. Limited to 16 vertices."""
    indices = _indices(g, s)
    if len(indices) > EXHAUSTIVE_LIMIT:
        raise ValueError(
            f"exhaustive matching supports at most {EXHAUSTIVE_LIMIT} vertices, got {len(indices)}."
        )
    local = {index: bit for bit, index in enumerate(indices)}
    neighbor_masks = [0] * len(indices)
    for bit, index in enumerate(indices):
        for other in g.neighbor_indices(index):
            if other in local:
                neighbor_masks[bit] |= 1 << local[other]

    @lru_cache(maxsize=None)
    def best(mask: int) -> int:
        if mask == 0:
            return 0
        low = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << low)
        result = best(rest)
        candidates = neighbor_masks[low] & rest
        while candidates:
            bit = candidates & -candidates
            result = max(result, 1 + best(rest & ~bit))
            candidates &= ~bit
        return result

    return best((1 << len(indices)) - 1)
