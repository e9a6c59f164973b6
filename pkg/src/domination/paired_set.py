"""PairedSet value object and its canonical JSON form."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, Iterable, Mapping

from flower import FlowerError, Graph, Vertex, parse_vertex, rotate

from .errors import PairedSetFormatError

VertexPair = tuple[Vertex, Vertex]


def _sorted_pair(a: Vertex, b: Vertex) -> VertexPair:
    return (a, b) if a.name <= b.name else (b, a)


@dataclass(frozen=True, slots=True)
class PairedSet:
    """Vertex set D together with the pairing claimed to be a perfect matching of <D>."""

    members: frozenset[Vertex]
    pairing: tuple[VertexPair, ...]

    @classmethod
    def of(cls, members: Iterable[Vertex], pairing: Iterable[VertexPair]) -> PairedSet:
        pairs = sorted(
            (_sorted_pair(a, b) for a, b in pairing),
            key=lambda pair: (pair[0].name, pair[1].name),
        )
        return cls(members=frozenset(members), pairing=tuple(pairs))

    @classmethod
    def from_pairs(cls, pairing: Iterable[VertexPair]) -> PairedSet:
        pairs = list(pairing)
        return cls.of((vertex for pair in pairs for vertex in pair), pairs)

    @classmethod
    def from_payload(cls, payload: Any) -> PairedSet:
        if not isinstance(payload, Mapping):
            raise PairedSetFormatError("PairedSet document must be a JSON object.")
        raw_members = payload.get("members")
        raw_pairs = payload.get("pairs")
        if not isinstance(raw_members, list):
            raise PairedSetFormatError("members must be an array of vertex names.")
        if not isinstance(raw_pairs, list):
            raise PairedSetFormatError("pairs must be an array of [a, b] arrays.")

        try:
            members = [parse_vertex(name) for name in raw_members]
            pairs: list[VertexPair] = []
            for index, raw_pair in enumerate(raw_pairs):
                if not isinstance(raw_pair, list) or len(raw_pair) != 2:
                    raise PairedSetFormatError(f"pairs[{index}] must be a two-element array.")
                pairs.append((parse_vertex(raw_pair[0]), parse_vertex(raw_pair[1])))
        except FlowerError as error:
            raise PairedSetFormatError(str(error)) from error
        return cls.of(members, pairs)

    @classmethod
    def from_json(cls, text: str) -> PairedSet:
        try:
            payload = json.loads(text)
        except json.JSONDecodeError as error:
            raise PairedSetFormatError(f"Failed to parse PairedSet JSON: {error}") from error
        return cls.from_payload(payload)

    def __len__(self) -> int:
        return len(self.members)

    def sorted_members(self) -> list[Vertex]:
        return sorted(self.members, key=lambda vertex: vertex.name)

    def to_payload(self) -> dict[str, Any]:
        return {
            "members": [vertex.name for vertex in self.sorted_members()],
            "pairs": [[a.name, b.name] for a, b in self.pairing],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_payload())

    def rotated(self, g: Graph, shift: int) -> PairedSet:
        return PairedSet.of(
            (rotate(g, vertex, shift) for vertex in self.members),
            ((rotate(g, a, shift), rotate(g, b, shift)) for a, b in self.pairing),
        )
