"""Deterministic text renderings of a flower graph: edge list, DOT, JSON."""

from __future__ import annotations

import json

from .graph import Graph
from .vertex import Hub

FORMATS = ("edgelist", "dot", "json")


def _sorted_edge_names(g: Graph) -> list[tuple[str, str]]:
    pairs = [tuple(sorted((a.name, b.name))) for a, b in g.edges()]
    return sorted(pairs)


def to_edgelist(g: Graph) -> str:
    """One `a b` line per edge, names sorted within and across lines."""
    return "".join(f"{a} {b}\n" for a, b in _sorted_edge_names(g))


def to_dot(g: Graph) -> str:
    params = g.params
    lines = [f'graph "f_{params.n}x{params.m}" {{']
    for name, vertex in sorted((vertex.name, vertex) for vertex in g.vertices):
        shape = "doublecircle" if isinstance(vertex, Hub) else "circle"
        lines.append(f'  "{name}" [shape={shape}];')
    for a, b in _sorted_edge_names(g):
        lines.append(f'  "{a}" -- "{b}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(g: Graph) -> str:
    payload = {
        "n": g.params.n,
        "m": g.params.m,
        "vertices": sorted(vertex.name for vertex in g.vertices),
        "edges": [list(pair) for pair in _sorted_edge_names(g)],
    }
    return json.dumps(payload, indent=2) + "\n"


def render(g: Graph, fmt: str) -> str:
    if fmt == "edgelist":
        return to_edgelist(g)
    if fmt == "dot":
        return to_dot(g)
    if fmt == "json":
        return to_json(g)
    allowed = ", ".join(FORMATS)
    raise ValueError(f"format must be one of: {allowed}.")
