"""Immutable flower graph f_{n x m} with neighborhood and distance queries."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

import networkx as nx
import numpy as np

from .errors import ParameterDomainError, UnknownVertexError
from .vertex import Hub, Petal, Vertex


@dataclass(frozen=True, slots=True)
class FlowerParams:
    """The pair (n, m): n petals around an n-cycle, each petal an m-cycle."""

    n: int
    m: int

    def __post_init__(self) -> None:
        for field, value in (("n", self.n), ("m", self.m)):
            if isinstance(value, bool) or not isinstance(value, int):
                raise ParameterDomainError(f"{field} must be an integer, got {value!r}.")
            if value < 3:
                raise ParameterDomainError(f"{field} must be >= 3, got {value}.")

    @property
    def interior_length(self) -> int:
        """Number of degree-2 vertices per petal (m - 2)."""
        return self.m - 2

    @property
    def vertex_count(self) -> int:
        return self.n * (self.m - 1)

    @property
    def edge_count(self) -> int:
        return self.n * self.m


class Graph:
    """Vertex-indexed flower graph. Never mutated after `build_flower`."""

    __slots__ = ("_params", "_vertices", "_index", "_adjacency", "_nx", "_bfs_cache")

    def __init__(
        self,
        *,
        params: FlowerParams,
        vertices: tuple[Vertex, ...],
        adjacency: tuple[tuple[int, ...], ...],
    ) -> None:
        self._params = params
        self._vertices = vertices
        self._index = {vertex: position for position, vertex in enumerate(vertices)}
        self._adjacency = adjacency

        graph = nx.Graph()
        graph.add_nodes_from(range(len(vertices)))
        graph.add_edges_from(
            (a, b) for a, neighbors in enumerate(adjacency) for b in neighbors if a < b
        )
        self._nx = nx.freeze(graph)
        self._bfs_cache: dict[int, dict[int, int]] = {}

    @property
    def params(self) -> FlowerParams:
        return self._params

    @property
    def vertices(self) -> tuple[Vertex, ...]:
        return self._vertices

    @property
    def nx_graph(self) -> nx.Graph:
        """Frozen networkx view on vertex indices."""
        return self._nx

    def __len__(self) -> int:
        return len(self._vertices)

    def __contains__(self, vertex: object) -> bool:
        return vertex in self._index

    def __repr__(self) -> str:
        return f"Graph(n={self._params.n}, m={self._params.m})"

    def index(self, vertex: Vertex) -> int:
        try:
            return self._index[vertex]
        except (KeyError, TypeError):
            raise UnknownVertexError(
                f"{vertex} is not a vertex of f_{self._params.n}x{self._params.m}"
            ) from None

    def vertex(self, index: int) -> Vertex:
        return self._vertices[index]

    def hub(self, i: int) -> Hub:
        """Hub u_i with the subscript taken modulo n."""
        return Hub((i - 1) % self._params.n + 1)

    def petal(self, i: int, j: int) -> Petal:
        """Petal vertex v_{i,j}; i is taken modulo n, j must lie in 1..m-2."""
        vertex = Petal((i - 1) % self._params.n + 1, j)
        self.index(vertex)
        return vertex

    def neighbor_indices(self, index: int) -> tuple[int, ...]:
        return self._adjacency[index]

    def neighbors(self, vertex: Vertex) -> tuple[Vertex, ...]:
        return tuple(self._vertices[b] for b in self._adjacency[self.index(vertex)])

    def degree(self, vertex: Vertex) -> int:
        return len(self._adjacency[self.index(vertex)])

    def has_edge(self, a: Vertex, b: Vertex) -> bool:
        return self.index(b) in self._adjacency[self.index(a)]

    def edge_indices(self) -> tuple[tuple[int, int], ...]:
        """All edges as (a, b) index pairs with a < b, in index order."""
        return tuple(
            (a, b) for a, neighbors in enumerate(self._adjacency) for b in neighbors if a < b
        )

    def edges(self) -> tuple[tuple[Vertex, Vertex], ...]:
        return tuple((self._vertices[a], self._vertices[b]) for a, b in self.edge_indices())

    def distances_from(self, index: int) -> dict[int, int]:
        cached = self._bfs_cache.get(index)
        if cached is None:
            cached = dict(nx.single_source_shortest_path_length(self._nx, index))
            self._bfs_cache[index] = cached
        return cached

    def ball_indices(self, index: int, k: int) -> frozenset[int]:
        if k < 0:
            raise ValueError(f"k must be >= 0, got {k}.")
        return frozenset(nx.single_source_shortest_path_length(self._nx, index, cutoff=k))

    def covered_indices(self, sources: Iterable[int], k: int) -> frozenset[int]:
        """Indices within distance k of any source (multi-source BFS)."""
        source_set = set(sources)
        if not source_set:
            return frozenset()
        return frozenset(nx.multi_source_dijkstra_path_length(self._nx, source_set, cutoff=k))


@lru_cache(maxsize=128)
def build_flower(params: FlowerParams) -> Graph:
    """Build f_{n x m} from the edge sets E1 (hub cycle), E2 (petal paths), E3 (petal ends)."""
    n, m = params.n, params.m
    interior = params.interior_length

    vertices: list[Vertex] = [Hub(i) for i in range(1, n + 1)]
    vertices.extend(Petal(i, j) for i in range(1, n + 1) for j in range(1, interior + 1))
    index = {vertex: position for position, vertex in enumerate(vertices)}

    def hub(i: int) -> int:
        return index[Hub((i - 1) % n + 1)]

    edge_list: list[tuple[int, int]] = []
    for i in range(1, n + 1):
        edge_list.append((hub(i), hub(i + 1)))
        for j in range(1, interior):
            edge_list.append((index[Petal(i, j)], index[Petal(i, j + 1)]))
        edge_list.append((hub(i), index[Petal(i, 1)]))
        edge_list.append((hub(i + 1), index[Petal(i, interior)]))

    neighbors: list[set[int]] = [set() for _ in vertices]
    for a, b in edge_list:
        neighbors[a].add(b)
        neighbors[b].add(a)

    return Graph(
        params=params,
        vertices=tuple(vertices),
        adjacency=tuple(tuple(sorted(adjacent)) for adjacent in neighbors),
    )


def flower(n: int, m: int) -> Graph:
    return build_flower(FlowerParams(n, m))


def distance(g: Graph, a: Vertex, b: Vertex) -> int:
    return g.distances_from(g.index(a))[g.index(b)]


def k_ball(g: Graph, v: Vertex, k: int) -> frozenset[Vertex]:
    """{w : d(v, w) <= k}, v included."""
    return frozenset(g.vertex(w) for w in g.ball_indices(g.index(v), k))


def rotate(g: Graph, v: Vertex, shift: int) -> Vertex:
    """Cyclic automorphism i -> i + shift (mod n) on hubs and petals alike."""
    n = g.params.n
    if isinstance(v, Hub):
        return Hub((v.i - 1 + shift) % n + 1)
    return Petal((v.i - 1 + shift) % n + 1, v.j)


def petal_interior(g: Graph, i: int) -> tuple[Petal, ...]:
    """V_i in j order."""
    return tuple(g.petal(i, j) for j in range(1, g.params.interior_length + 1))


def petal_cycle(g: Graph, i: int) -> tuple[Vertex, ...]:
    """C_{i,m} = (u_i, v_{i,1}, ..., v_{i,m-2}, u_{i+1})."""
    return (g.hub(i), *petal_interior(g, i), g.hub(i + 1))


def distance_matrix(g: Graph) -> np.ndarray:
    size = len(g)
    matrix = np.zeros((size, size), dtype=np.int32)
    for source, lengths in nx.all_pairs_shortest_path_length(g.nx_graph):
        targets = np.fromiter(lengths.keys(), dtype=np.int64, count=len(lengths))
        matrix[source, targets] = np.fromiter(lengths.values(), dtype=np.int32, count=len(lengths))
    return matrix


def diameter(g: Graph) -> int:
    return int(distance_matrix(g).max())
