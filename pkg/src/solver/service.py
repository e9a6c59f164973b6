"""Exact minimum (paired) k-distance domination by iterating target sizes."""

from __future__ import annotations

import logging
import multiprocessing
import time
from dataclasses import replace
from typing import Callable

from domination import PairedSet, is_k_dominating, is_k_paired_dominating, max_matching
from flower import Graph, Vertex
from shared.defaults import WORKER_GRACE_SECONDS

from .errors import InstanceTooLargeError, SolverError, WitnessError
from .results import DominatingSetResult, SolveBudget, SolveResult
from .search import (
    BranchAndBound,
    MemberKey,
    SearchTables,
    SearchTimeout,
    SubtreeOutcome,
    flower_tables,
)
from .workers import SearchWorkerPool

SizeSearch = Callable[[SearchTables, int, float], SubtreeOutcome]


def _check_instance(g: Graph, k: int, budget: SolveBudget) -> None:
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}.")
    if len(g) > budget.max_vertices:
        raise InstanceTooLargeError(
            f"f_{g.params.n}x{g.params.m} has {len(g)} vertices, above the cap of "
            f"{budget.max_vertices}."
        )


def _millis(started: float) -> int:
    return int((time.monotonic() - started) * 1000)


def _search_in_process(tables: SearchTables, units: int, deadline: float) -> SubtreeOutcome:
    search = BranchAndBound(tables, deadline=deadline)
    try:
        search.run(units)
    except SearchTimeout:
        return SubtreeOutcome(best=search.best, nodes=search.nodes, timed_out=True)
    return SubtreeOutcome(best=search.best, nodes=search.nodes, timed_out=False)


def _search_with_pool(pool: SearchWorkerPool) -> SizeSearch:
    def search_size(tables: SearchTables, units: int, deadline: float) -> SubtreeOutcome:
        root = BranchAndBound(tables)
        remaining = max(deadline - time.monotonic(), 0.0)
        deadline_at = time.time() + remaining
        tasks = [replace(task, deadline_at=deadline_at) for task in root.root_tasks(units)]
        outcomes = pool.run(tasks, timeout_seconds=remaining + WORKER_GRACE_SECONDS)
        keys = [outcome.best for outcome in outcomes if outcome.best is not None]
        return SubtreeOutcome(
            best=min(keys) if keys else None,
            nodes=root.nodes + sum(outcome.nodes for outcome in outcomes),
            timed_out=any(outcome.timed_out for outcome in outcomes),
        )

    return search_size


def _paired_witness(g: Graph, k: int, key: MemberKey) -> PairedSet:
    members = [g.vertex(index) for index in key]
    witness = PairedSet.from_pairs(max_matching(g, members))
    diagnostic = is_k_paired_dominating(g, witness, k)
    if not diagnostic.valid or len(witness) != len(key):
        raise WitnessError(
            f"search result {[vertex.name for vertex in members]} failed verification: "
            f"{diagnostic.failure} at {diagnostic.witness}"
        )
    return witness


def _usable_incumbent(
    g: Graph, k: int, incumbent: PairedSet | None, log: logging.Logger
) -> PairedSet | None:
    if incumbent is None:
        return None
    diagnostic = is_k_paired_dominating(g, incumbent, k)
    if diagnostic.valid:
        return incumbent
    log.warning(
        "Ignoring invalid incumbent for f_%dx%d k=%d: %s", g.params.n, g.params.m, k, diagnostic.failure
    )
    return None


def min_paired_domination(
    g: Graph,
    k: int,
    budget: SolveBudget | None = None,
    *,
    threads: int = 1,
    incumbent: PairedSet | None = None,
    log_queue: multiprocessing.Queue[object] | None = None,
    logger: logging.Logger | None = None,
) -> SolveResult:
    """Minimum k-distance paired-dominating set, searched at sizes 2, 4, 6, ...

    Each size is searched to exhaustion, so the witness is the lexicographically
    least member set (canonical index order) of minimum size, whatever `threads`
    is. When the time limit or `max_set_size` stops the search first, the result
    is unproven and carries `incumbent` (if valid) as the best known bound.
    """
    log = logger or logging.getLogger("solver")
    budget = budget or SolveBudget()
    _check_instance(g, k, budget)
    if threads < 1:
        raise ValueError(f"threads must be >= 1, got {threads}.")

    started = time.monotonic()
    deadline = started + budget.time_limit
    n, m = g.params.n, g.params.m
    tables = flower_tables(n, m, k, True)
    best_known = _usable_incumbent(g, k, incumbent, log)
    nodes = 0

    def unproven(lower_bound: int) -> SolveResult:
        return SolveResult(
            optimum=None if best_known is None else len(best_known),
            witness=best_known,
            nodes_explored=nodes,
            proven=False,
            millis=_millis(started),
            lower_bound=lower_bound,
        )

    pool: SearchWorkerPool | None = None
    try:
        search_size: SizeSearch = _search_in_process
        if threads > 1:
            pool = SearchWorkerPool(
                n=n,
                m=m,
                k=k,
                paired=True,
                workers=threads,
                log_queue=log_queue,
                log_level=log.getEffectiveLevel(),
                logger=log,
            )
            search_size = _search_with_pool(pool)

        for size in range(2, len(g) + 1, 2):
            if budget.max_set_size is not None and size > budget.max_set_size:
                log.info("f_%dx%d k=%d: no valid set of size <= %d", n, m, k, budget.max_set_size)
                return unproven(size)
            if time.monotonic() > deadline:
                return unproven(size)

            outcome = search_size(tables, size // 2, deadline)
            nodes += outcome.nodes
            log.debug(
                "f_%dx%d k=%d size %d: nodes=%d found=%s",
                n,
                m,
                k,
                size,
                outcome.nodes,
                outcome.best is not None,
            )

            if outcome.best is not None:
                if outcome.timed_out:
                    log.warning(
                        "f_%dx%d k=%d: optimum %d proven but the witness tie-break was cut short",
                        n,
                        m,
                        k,
                        size,
                    )
                witness = _paired_witness(g, k, outcome.best)
                millis = _millis(started)
                log.info("Solved f_%dx%d k=%d: optimum=%d nodes=%d millis=%d", n, m, k, size, nodes, millis)
                return SolveResult(
                    optimum=size,
                    witness=witness,
                    nodes_explored=nodes,
                    proven=True,
                    millis=millis,
                    lower_bound=size,
                )
            if outcome.timed_out:
                log.warning("f_%dx%d k=%d: time limit reached while searching size %d", n, m, k, size)
                return unproven(size)
    finally:
        if pool is not None:
            pool.close()

    raise SolverError(f"no paired dominating set found for f_{n}x{m}, k={k}.")


def min_distance_domination(
    g: Graph,
    k: int,
    budget: SolveBudget | None = None,
    *,
    logger: logging.Logger | None = None,
) -> DominatingSetResult:
    """Minimum k-distance dominating set (no pairing), searched at sizes 1, 2, 3, ..."""
    log = logger or logging.getLogger("solver")
    budget = budget or SolveBudget()
    _check_instance(g, k, budget)

    started = time.monotonic()
    deadline = started + budget.time_limit
    tables = flower_tables(g.params.n, g.params.m, k, False)
    nodes = 0
    for size in range(1, len(g) + 1):
        if budget.max_set_size is not None and size > budget.max_set_size:
            break
        outcome = _search_in_process(tables, size, deadline)
        nodes += outcome.nodes
        if outcome.best is not None:
            members: tuple[Vertex, ...] = tuple(g.vertex(index) for index in outcome.best)
            if not is_k_dominating(g, members, k):
                raise WitnessError(f"search result {[vertex.name for vertex in members]} is not dominating")
            return DominatingSetResult(
                optimum=size,
                members=members,
                nodes_explored=nodes,
                proven=True,
                millis=_millis(started),
            )
        if outcome.timed_out:
            break

    log.warning("f_%dx%d k=%d: plain domination search stopped without a result", g.params.n, g.params.m, k)
    return DominatingSetResult(
        optimum=None, members=(), nodes_explored=nodes, proven=False, millis=_millis(started)
    )
