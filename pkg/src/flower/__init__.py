"""Flower graph f_{n x m}: construction, queries and exports."""

from .errors import FlowerError, ParameterDomainError, UnknownVertexError, VertexFormatError
from .export import FORMATS, render, to_dot, to_edgelist, to_json
from .graph import (
    FlowerParams,
    Graph,
    build_flower,
    diameter,
    distance,
    distance_matrix,
    flower,
    k_ball,
    petal_cycle,
    petal_interior,
    rotate,
)
from .vertex import Hub, Petal, Vertex, is_hub, parse_vertex

__all__ = [
    "FORMATS",
    "FlowerError",
    "FlowerParams",
    "Graph",
    "Hub",
    "ParameterDomainError",
    "Petal",
    "UnknownVertexError",
    "Vertex",
    "VertexFormatError",
    "build_flower",
    "diameter",
    "distance",
    "distance_matrix",
    "flower",
    "is_hub",
    "k_ball",
    "parse_vertex",
    "petal_cycle",
    "petal_interior",
    "render",
    "rotate",
    "to_dot",
    "to_edgelist",
    "to_json",
]
