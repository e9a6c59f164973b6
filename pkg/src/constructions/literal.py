"""Published constructive sets, transcribed subcase by subcase.

Every subscript is taken modulo n on the hub index. Petal positions are not
wrapped, so a transcription that runs off the petal shows up as an unknown
vertex during verification. A candidate records the ledger readings needed to
make it well defined: `completions` fill in missing or mismatched index
ranges, `notes` only concern the case label.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from flower import Hub, Petal, Vertex

Pair = tuple[Vertex, Vertex]


@dataclass(frozen=True, slots=True)
class LiteralCandidate:
    label: str
    pairs: tuple[Pair, ...]
    completions: tuple[str, ...] = ()
    notes: tuple[str, ...] = ()
    on_failure: str | None = None


@dataclass(slots=True)
class _Terms:
    n: int
    period: int
    blocks: int
    pairs: list[Pair] = field(default_factory=list)

    def _wrap(self, i: int) -> int:
        return (i - 1) % self.n + 1

    def hubs(self, a: int, b: int) -> _Terms:
        self.pairs.append((Hub(self._wrap(a)), Hub(self._wrap(b))))
        return self

    def hub_blocks(self, step: int, offset: int, count: int) -> _Terms:
        """(u(step*l + offset), u(step*l + offset + 1)) for 1 <= l <= count."""
        for l in range(1, count + 1):
            self.hubs(step * l + offset, step * l + offset + 1)
        return self

    def edge(self, a: Vertex, b: Vertex) -> _Terms:
        self.pairs.append((a, b))
        return self

    def petals(self, petal_indices: Iterable[int], shift: int, blocks: int | None = None) -> _Terms:
        """(v(i, period*j + shift), v(i, period*j + shift + 1)) for every listed i and 1 <= j <= blocks."""
        count = self.blocks if blocks is None else blocks
        for i in petal_indices:
            wrapped = self._wrap(i)
            for j in range(1, count + 1):
                position = self.period * j + shift
                self.pairs.append((Petal(wrapped, position), Petal(wrapped, position + 1)))
        return self

    def build(
        self,
        label: str,
        completions: tuple[str, ...] = (),
        notes: tuple[str, ...] = (),
        on_failure: str | None = None,
    ) -> LiteralCandidate:
        return LiteralCandidate(label, tuple(self.pairs), completions, notes, on_failure)


def _span(start: int, stop: int) -> range:
    return range(start, stop + 1)


def _distance_one(n: int, m: int) -> list[LiteralCandidate]:
    t = m // 4
    residue = m % 4
    terms = _Terms(n, 4, t)

    if residue == 0:
        if n % 2 == 0:
            if m != 4:
                terms.petals(_span(1, n), -1, t - 1)
            return [terms.hub_blocks(2, -1, n // 2).build("m=0 (mod 4), even n")]
        t_prime = (n - 1) // 2
        completions: tuple[str, ...] = ()
        if m != 4:
            terms.petals(_span(1, n - 1), -1, t - 1)
            terms.petals([n], 0, t - 1)
            completions = ("k1-m0-odd-range",)
        terms.hub_blocks(2, -1, t_prime).edge(Hub(n), Petal(n, 1))
        return [terms.build("m=0 (mod 4), odd n", completions)]

    if residue == 1:
        return [terms.petals(_span(1, n), -3).build("m=1 (mod 4)")]

    if residue == 2:
        terms.petals(_span(1, n), -2)
        if n == 5:
            return [terms.hubs(1, 2).hubs(4, 5).build("m=2 (mod 4), n=5")]
        wrap = "hub-wrap" if n % 4 == 1 else None
        return [terms.hub_blocks(4, -3, -(-n // 4)).build("m=2 (mod 4), n!=5", on_failure=wrap)]

    # m = 3 (mod 4)
    completions = ("k1-m3-block-index",) if t else ()
    if n == 4:
        terms.petals(_span(1, 4), -1).hubs(1, 2).hubs(3, 4)
        return [terms.build("m=3 (mod 4), n=4")]
    if n % 3 == 0:
        t_prime = n // 3
        for i in _span(1, t_prime):
            terms.petals([3 * i - 2, 3 * i - 1], -1)
        terms.petals([3 * l for l in _span(1, t_prime)], -2)
        return [terms.hub_blocks(3, -2, t_prime).build("m=3 (mod 4), n=3t", completions)]
    if n % 3 == 1:
        t_prime = n // 3
        for i in _span(1, t_prime):
            terms.petals([3 * i - 2, 3 * i - 1], -1)
        terms.petals([3 * l for l in _span(1, t_prime - 1)], -2)
        terms.petals([n - 1, n], -1)
        terms.hub_blocks(3, -2, t_prime).hubs(n - 1, n)
        return [terms.build("m=3 (mod 4), n=3t+1", completions)]
    t_prime = -(-n // 3)
    for i in _span(1, t_prime):
        terms.petals([3 * i - 2, 3 * i - 1], -1)
    terms.petals([3 * l for l in _span(1, t_prime - 1)], -2)
    return [terms.hub_blocks(3, -2, t_prime).build("m=3 (mod 4), n=3t+2", completions)]


def _distance_two_m0(n: int, m: int, t: int) -> LiteralCandidate:
    terms = _Terms(n, 6, t)
    t_prime = -(-n // 2)
    if n % 2:
        if m != 6:
            terms.petals(_span(1, n - 1), -1, t - 1)
            terms.petals([n], 0, t - 1)
        terms.edge(Hub(n), Petal(n, 1)).hub_blocks(2, -1, t_prime - 1)
        return terms.build("m=0 (mod 6), odd n")
    if m == 6:
        return terms.hub_blocks(2, -1, t_prime).build("m=0 (mod 6), m=6, even n")
    terms.petals(_span(1, n), -1, t - 1).hub_blocks(2, -1, t_prime)
    return terms.build("m=0 (mod 6), m!=6, even n", notes=("k2-m0-label",))


def _distance_two_m3(n: int, t: int) -> list[LiteralCandidate]:
    t_prime = -(-n // 5)
    label_index = ("k2-m3-hub-index",)
    candidates: list[LiteralCandidate] = []

    if n == 3:
        terms = _Terms(n, 6, t).petals([1, 2], -1).petals([3], -2).hubs(1, 2)
        candidates.append(terms.build("m=3 (mod 6), n=3"))
    elif n == 5:
        terms = _Terms(n, 6, t).petals([1, 2], -1).petals([3], -2).petals([4], -3)
        terms.petals([5], -2).hubs(1, 2)
        candidates.append(terms.build("m=3 (mod 6), n=5"))
    if n in (4, 6):
        terms = _Terms(n, 6, t)
        for i in _span(1, t_prime):
            terms.petals([4 * i - 3, 4 * i - 2], -1)
        terms.petals([3, 4], -2).hubs(1, 2)
        on_failure = "k2-m3-n6" if n == 6 else None
        candidates.append(terms.build("m=3 (mod 6), n=4,6", on_failure=on_failure))

    if n >= 6:
        terms = _Terms(n, 6, t)
        remainder = n % 5
        if remainder == 0:
            for i in _span(1, t_prime):
                terms.petals([5 * i - 4, 5 * i - 3], -1)
                terms.petals([5 * i - 2], -2).petals([5 * i], -2).petals([5 * i - 1], -3)
            terms.hub_blocks(5, -4, t_prime)
        elif remainder == 1:
            for i in _span(1, t_prime - 1):
                terms.petals([5 * i - 4, 5 * i - 3], -1).petals([5 * i - 2], -2)
            for p in _span(1, t_prime - 2):
                terms.petals([5 * p], -2).petals([5 * p - 1], -3)
            terms.petals([n - 2], -2).petals([n - 1, n], -1)
            terms.hub_blocks(5, -4, t_prime - 1).hubs(n - 1, n)
        elif remainder == 2:
            for i in _span(1, t_prime):
                terms.petals([5 * i - 4, 5 * i - 3], -1)
            for i in _span(1, t_prime - 1):
                terms.petals([5 * i - 2], -2).petals([5 * i - 1], -3).petals([5 * i], -2)
            terms.hub_blocks(5, -4, t_prime)
        else:
            for i in _span(1, t_prime):
                terms.petals([5 * i - 4, 5 * i - 3], -1).petals([5 * i - 2], -2)
            for i in _span(1, t_prime - 1):
                terms.petals([5 * i - 1], -3).petals([5 * i], -2)
            if remainder == 4:
                terms.petals([n], -2)
            terms.hub_blocks(5, -4, t_prime)
        candidates.append(terms.build(f"m=3 (mod 6), n=5t+{remainder}", label_index))
    return candidates


def _distance_two_m4(n: int, t: int) -> LiteralCandidate:
    t_prime = -(-n // 4)
    terms = _Terms(n, 6, t)
    if n == 3:
        terms.petals([1, 2], -1).petals([3], -2).hub_blocks(4, -3, t_prime)
        return terms.build("m=4 (mod 6), n=3")
    if n == 5:
        for i in _span(1, t_prime):
            terms.petals([3 * i - 2, 3 * i - 1], -1)
        terms.petals([3], -2).hubs(1, 2).hubs(4, 5)
        return terms.build("m=4 (mod 6), n=5")
    remainder = n % 4
    if remainder == 0:
        for i in _span(1, t_prime):
            terms.petals([4 * i - 3, 4 * i - 2], -1).petals([4 * i - 1, 4 * i], -2)
        terms.hub_blocks(4, -3, t_prime)
    elif remainder == 1:
        for i in _span(1, t_prime - 1):
            terms.petals([4 * i - 3, 4 * i - 2], -1).petals([4 * i - 1], -2)
        for p in _span(1, t_prime - 2):
            terms.petals([4 * p], -2)
        terms.petals([n - 1, n], -1)
        terms.hub_blocks(4, -3, t_prime - 1).hubs(n - 1, n)
    elif remainder == 2:
        for i in _span(1, t_prime):
            terms.petals([4 * i - 3, 4 * i - 2], -1)
        for i in _span(1, t_prime - 1):
            terms.petals([4 * i - 1, 4 * i], -2)
        terms.hub_blocks(4, -3, t_prime)
    else:
        for i in _span(1, t_prime):
            terms.petals([4 * i - 3, 4 * i - 2], -1).petals([4 * i - 1], -2)
        for p in _span(1, t_prime - 1):
            terms.petals([4 * p], -2)
        terms.hub_blocks(4, -3, t_prime)
    return terms.build(f"m=4 (mod 6), n=4t+{remainder}")


def _distance_two_m5(n: int, t: int) -> LiteralCandidate:
    t_prime = -(-n // 3)
    terms = _Terms(n, 6, t)
    notes = ("k2-case-label",)
    if n == 3:
        terms.petals([1, 2], -1).petals([3], -2).hubs(1, 2)
        return terms.build("m=5 (mod 6), n=3", notes=notes)
    if n == 4:
        terms.petals(_span(1, 4), -1).hubs(1, 2).hubs(3, 4)
        return terms.build("m=5 (mod 6), n=4", notes=notes)
    if n == 5:
        terms.petals([1, 2, 4, 5], -1).petals([3], -2).hubs(1, 2).hubs(3, 4)
        return terms.build("m=5 (mod 6), n=5", notes=notes, on_failure="k2-m5-n5")
    remainder = n % 3
    if remainder == 0:
        for i in _span(1, t_prime):
            terms.petals([3 * i - 2, 3 * i - 1], -1).petals([3 * i], -2)
        terms.hub_blocks(3, -2, t_prime)
    elif remainder == 1:
        for i in _span(1, t_prime - 1):
            terms.petals([3 * i - 2, 3 * i - 1], -1)
        terms.petals([n - 1, n], -1)
        terms.petals([3 * i for i in _span(1, t_prime - 2)], -2)
        terms.hub_blocks(3, -2, t_prime - 1).hubs(n - 1, n)
    else:
        for i in _span(1, t_prime):
            terms.petals([3 * i - 2, 3 * i - 1], -1)
        terms.petals([3 * i for i in _span(1, t_prime - 1)], -2)
        terms.hub_blocks(3, -2, t_prime)
    return terms.build(f"m=5 (mod 6), n=3t+{remainder}", notes=notes)


def _distance_two(n: int, m: int) -> list[LiteralCandidate]:
    t = m // 6
    residue = m % 6
    if residue == 0:
        return [_distance_two_m0(n, m, t)]
    if residue == 1:
        return [_Terms(n, 6, t).petals(_span(1, n), -4).build("m=1 (mod 6)")]
    if residue == 2:
        terms = _Terms(n, 6, t).petals(_span(1, n), -3).hub_blocks(6, -5, -(-n // 6))
        if n % 6 == 1:
            terms.hubs(n - 1, n)
            return [terms.build("m=2 (mod 6), n=1 (mod 6)", on_failure="hub-wrap")]
        return [terms.build("m=2 (mod 6)")]
    if residue == 3:
        return _distance_two_m3(n, t)
    if residue == 4:
        return [_distance_two_m4(n, t)]
    return [_distance_two_m5(n, t)]


def literal_candidates(n: int, m: int, k: int) -> list[LiteralCandidate]:
    """Published sets applicable to (n, m, k), in the order they are listed."""
    if k == 1:
        return _distance_one(n, m)
    if k == 2:
        return _distance_two(n, m)
    return []
