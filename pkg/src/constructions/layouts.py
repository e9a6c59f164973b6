"""Canonical paired sets: a hub layout per residue class, then a greedy petal fill."""

from __future__ import annotations

from dataclasses import dataclass

from flower import Graph, Hub, Petal, Vertex

from .errors import RepairFailedError, UnsupportedDistanceError
from .formulas import SUPPORTED_DISTANCES

Pair = tuple[Vertex, Vertex]

ALL_HUBS = "all-hubs"
PERIODIC = "periodic"
NO_HUBS = "none"


@dataclass(frozen=True, slots=True)
class HubLayout:
    kind: str
    period: int | None = None

    def describe(self) -> str:
        if self.kind == PERIODIC:
            return f"{PERIODIC}({self.period})"
        return self.kind


_DISTANCE_ONE = {
    0: HubLayout(ALL_HUBS),
    1: HubLayout(NO_HUBS),
    2: HubLayout(PERIODIC, 4),
    3: HubLayout(PERIODIC, 3),
}
_DISTANCE_TWO = {
    0: HubLayout(ALL_HUBS),
    1: HubLayout(NO_HUBS),
    2: HubLayout(PERIODIC, 6),
    3: HubLayout(PERIODIC, 5),
    4: HubLayout(PERIODIC, 4),
    5: HubLayout(PERIODIC, 3),
}


def hub_layout(m: int, k: int) -> HubLayout:
    if k not in SUPPORTED_DISTANCES:
        raise UnsupportedDistanceError(
            f"canonical layouts exist only for k in {SUPPORTED_DISTANCES}, got k={k}."
        )
    if k == 1:
        return _DISTANCE_ONE[m % 4]
    return _DISTANCE_TWO[m % 6]


def hub_pairs(n: int, layout: HubLayout) -> list[Pair]:
    if layout.kind == NO_HUBS:
        return []
    if layout.kind == ALL_HUBS:
        pairs: list[Pair] = [(Hub(2 * l - 1), Hub(2 * l)) for l in range(1, n // 2 + 1)]
        if n % 2:
            pairs.append((Hub(n), Petal(n, 1)))
        return pairs

    period = layout.period or 1
    count = -(-n // period)
    pairs = [(Hub(period * (l - 1) + 1), Hub(period * (l - 1) + 2)) for l in range(1, count + 1)]
    if n % period == 1:
        # (u_n, u_{n+1}) would reuse u_1.
        pairs[-1] = (Hub(n - 1), Hub(n))
    return pairs


def fill_petals(g: Graph, k: int, pairs: list[Pair]) -> list[Pair]:
    """Extend `pairs` with interior pairs until every petal interior is within distance k.

    Petals are scanned in order; at the first undominated position p a pair
    (a, a+1) with a = min(p + k, L - 1) is placed.
    """
    interior = g.params.interior_length
    members = {g.index(vertex) for pair in pairs for vertex in pair}
    covered = set(g.covered_indices(members, k))
    filled = list(pairs)

    for i in range(1, g.params.n + 1):
        for p in range(1, interior + 1):
            if g.index(Petal(i, p)) in covered:
                continue
            if interior < 2:
                raise RepairFailedError(
                    f"petal {i} of f_{g.params.n}x{g.params.m} has no room for an interior pair."
                )
            a = min(p + k, interior - 1)
            pair = (Petal(i, a), Petal(i, a + 1))
            filled.append(pair)
            covered.update(g.covered_indices((g.index(pair[0]), g.index(pair[1])), k))
    return filled


def canonical_pairs(g: Graph, k: int) -> list[Pair]:
    layout = hub_layout(g.params.m, k)
    return fill_petals(g, k, hub_pairs(g.params.n, layout))
