"""Hub and petal vertex labels with their canonical text form."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import TypeAlias

from .errors import VertexFormatError

_HUB_PATTERN = re.compile(r"u([1-9]\d*)")
_PETAL_PATTERN = re.compile(r"v([1-9]\d*)\.([1-9]\d*)")


@dataclass(frozen=True, slots=True, order=True)
class Hub:
    """Degree-4 vertex u_i on the central n-cycle."""

    i: int

    @property
    def name(self) -> str:
        return f"u{self.i}"

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True, slots=True, order=True)
class Petal:
    """Degree-2 vertex v_{i,j}, the j-th interior vertex of petal i."""

    i: int
    j: int

    @property
    def name(self) -> str:
        return f"v{self.i}.{self.j}"

    def __str__(self) -> str:
        return self.name


Vertex: TypeAlias = Hub | Petal


def parse_vertex(text: str) -> Vertex:
    """Parse a canonical vertex name (`u3`, `v2.5`)."""
    if not isinstance(text, str):
        raise VertexFormatError(f"Vertex name must be a string, got {type(text).__name__}.")
    raw = text.strip()
    hub = _HUB_PATTERN.fullmatch(raw)
    if hub:
        return Hub(int(hub.group(1)))
    petal = _PETAL_PATTERN.fullmatch(raw)
    if petal:
        return Petal(int(petal.group(1)), int(petal.group(2)))
    raise VertexFormatError(f"Not a vertex name: {text!r}")


def is_hub(vertex: Vertex) -> bool:
    return isinstance(vertex, Hub)
