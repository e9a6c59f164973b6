"""Plain subset enumeration, the cross-check for the branch-and-bound search."""

from __future__ import annotations

from itertools import combinations

from domination import has_perfect_matching
from flower import Graph, Vertex

from .errors import InstanceTooLargeError

EXHAUSTIVE_VERTEX_LIMIT = 14


def exhaustive_min_paired(g: Graph, k: int) -> tuple[int, tuple[Vertex, ...]]:
    """Minimum size and lexicographically least minimum member set, by brute force."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}.")
    if len(g) > EXHAUSTIVE_VERTEX_LIMIT:
        raise InstanceTooLargeError(
            f"exhaustive search supports at most {EXHAUSTIVE_VERTEX_LIMIT} vertices, got {len(g)}."
        )

    balls = [g.ball_indices(index, k) for index in range(len(g))]
    everything = frozenset(range(len(g)))
    for size in range(2, len(g) + 1, 2):
        for subset in combinations(range(len(g)), size):
            covered = frozenset().union(*(balls[index] for index in subset))
            if covered != everything:
                continue
            members = tuple(g.vertex(index) for index in subset)
            if has_perfect_matching(g, members):
                return size, members
    raise ValueError(f"f_{g.params.n}x{g.params.m} has no paired dominating set.")
