"""Branch-and-bound search for a minimum union of disjoint covering units.

A unit is an edge (paired domination) or a single vertex (plain domination).
Coverage and membership are int bitsets over canonical vertex indices.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from functools import lru_cache

from flower import FlowerParams, Graph, build_flower

MemberKey = tuple[int, ...]

_CLOCK_CHECK_INTERVAL = 1024


class SearchTimeout(Exception):
    """Raised inside a search when its deadline passes."""


@dataclass(frozen=True, slots=True)
class SearchTables:
    vertex_count: int
    full: int
    unit_members: tuple[int, ...]
    unit_cover: tuple[int, ...]
    candidates: tuple[tuple[int, ...], ...]
    max_cover: int


@dataclass(frozen=True, slots=True)
class SubtreeTask:
    """One top-level branch: a partial state plus the units still to place.

    `deadline_at` is a `time.time()` timestamp, comparable across processes.
    """

    remaining: int
    used: int
    covered: int
    forbidden: int
    deadline_at: float | None = None

    def expired(self) -> bool:
        return self.deadline_at is not None and time.time() >= self.deadline_at


@dataclass(frozen=True, slots=True)
class SubtreeOutcome:
    best: MemberKey | None
    nodes: int
    timed_out: bool


def _bits(mask: int) -> MemberKey:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def build_tables(g: Graph, k: int, *, paired: bool) -> SearchTables:
    balls = [0] * len(g)
    for index in range(len(g)):
        for covered in g.ball_indices(index, k):
            balls[index] |= 1 << covered

    if paired:
        units = g.edge_indices()
        members = tuple((1 << a) | (1 << b) for a, b in units)
        cover = tuple(balls[a] | balls[b] for a, b in units)
    else:
        members = tuple(1 << index for index in range(len(g)))
        cover = tuple(balls)

    candidates: list[list[int]] = [[] for _ in range(len(g))]
    for unit, mask in enumerate(cover):
        for index in _bits(mask):
            candidates[index].append(unit)

    return SearchTables(
        vertex_count=len(g),
        full=(1 << len(g)) - 1,
        unit_members=members,
        unit_cover=cover,
        candidates=tuple(tuple(units) for units in candidates),
        max_cover=max(mask.bit_count() for mask in cover),
    )


@lru_cache(maxsize=32)
def flower_tables(n: int, m: int, k: int, paired: bool) -> SearchTables:
    return build_tables(build_flower(FlowerParams(n, m)), k, paired=paired)


class BranchAndBound:
    """Exhaustive search at one target unit count, keeping the least member key.

    Every member set of the target size that is a disjoint union of units and
    covers all vertices is visited, so the kept key is the lexicographically
    least one regardless of how the top-level branches are split.
    """

    def __init__(self, tables: SearchTables, *, deadline: float | None = None) -> None:
        self._tables = tables
        self._deadline = deadline
        self.nodes = 0
        self.best: MemberKey | None = None

    def root_tasks(self, units: int) -> list[SubtreeTask]:
        """Split the root into one task per candidate of the root branching vertex."""
        self.nodes += 1
        tables = self._tables
        if tables.vertex_count > units * tables.max_cover:
            return []
        tasks = []
        forbidden = 0
        for unit in self._branch_options(tables.full, 0, 0):
            tasks.append(
                SubtreeTask(
                    remaining=units - 1,
                    used=tables.unit_members[unit],
                    covered=tables.unit_cover[unit],
                    forbidden=forbidden,
                )
            )
            forbidden |= 1 << unit
        return tasks

    def run(self, units: int) -> None:
        self.run_task(SubtreeTask(remaining=units, used=0, covered=0, forbidden=0))

    def run_task(self, task: SubtreeTask) -> None:
        self._descend(task.remaining, task.used, task.covered, task.forbidden)

    def _tick(self) -> None:
        self.nodes += 1
        if (
            self._deadline is not None
            and self.nodes % _CLOCK_CHECK_INTERVAL == 0
            and time.monotonic() > self._deadline
        ):
            raise SearchTimeout()

    def _record(self, used: int) -> None:
        key = _bits(used)
        if self.best is None or key < self.best:
            self.best = key

    def _branch_options(self, uncovered: int, used: int, forbidden: int) -> list[int]:
        """Open units for the uncovered vertex with the fewest of them, lowest index on ties."""
        tables = self._tables
        best_options: list[int] | None = None
        mask = uncovered
        while mask:
            low = mask & -mask
            mask ^= low
            options = [
                unit
                for unit in tables.candidates[low.bit_length() - 1]
                if not (forbidden >> unit) & 1 and not tables.unit_members[unit] & used
            ]
            if best_options is None or len(options) < len(best_options):
                best_options = options
                if len(options) <= 1:
                    break
        return best_options or []

    def _descend(self, remaining: int, used: int, covered: int, forbidden: int) -> None:
        self._tick()
        tables = self._tables
        if covered == tables.full:
            if remaining == 0:
                self._record(used)
            return
        if remaining == 0:
            return
        uncovered = tables.full & ~covered
        if uncovered.bit_count() > remaining * tables.max_cover:
            return

        for unit in self._branch_options(uncovered, used, forbidden):
            self._descend(
                remaining - 1,
                used | tables.unit_members[unit],
                covered | tables.unit_cover[unit],
                forbidden,
            )
            forbidden |= 1 << unit


def explore(tables: SearchTables, task: SubtreeTask) -> SubtreeOutcome:
    deadline = None
    if task.deadline_at is not None:
        deadline = time.monotonic() + (task.deadline_at - time.time())
    search = BranchAndBound(tables, deadline=deadline)
    try:
        search.run_task(task)
    except SearchTimeout:
        return SubtreeOutcome(best=search.best, nodes=search.nodes, timed_out=True)
    return SubtreeOutcome(best=search.best, nodes=search.nodes, timed_out=False)
