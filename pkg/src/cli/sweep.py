"""Sweep rows comparing closed forms, constructions and the exact solver."""

from __future__ import annotations

import csv
import logging
import multiprocessing
from dataclasses import dataclass
from typing import Any, Iterable, TextIO

import numpy as np

from constructions import RepairFailedError, build_construction, formula, ledgered_alternatives
from flower import FlowerParams, flower
from solver import SolveBudget, min_paired_domination

CSV_HEADER = ("n", "m", "k", "formula", "construction", "literal", "oracle", "agree")
UNPROVEN = "unproven"

AGREE = "agree"
DISAGREE = "disagree"
LEDGERED = "ledgered"


def _cell(value: bool | int | None) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


@dataclass(frozen=True, slots=True)
class SweepRow:
    n: int
    m: int
    k: int
    formula_value: int
    construction_size: int | None
    construction_literal: bool | None
    oracle_value: int | None
    status: str
    millis: int = 0

    @property
    def agree(self) -> bool | None:
        """formula == oracle when the oracle value is proven, else None."""
        if self.oracle_value is None:
            return None
        return self.formula_value == self.oracle_value

    def to_csv_row(self) -> dict[str, str]:
        return {
            "n": str(self.n),
            "m": str(self.m),
            "k": str(self.k),
            "formula": str(self.formula_value),
            "construction": _cell(self.construction_size),
            "literal": _cell(self.construction_literal),
            "oracle": UNPROVEN if self.oracle_value is None else str(self.oracle_value),
            "agree": _cell(self.agree),
        }

    def to_payload(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "m": self.m,
            "k": self.k,
            "formula": self.formula_value,
            "construction": self.construction_size,
            "literal": self.construction_literal,
            "oracle": UNPROVEN if self.oracle_value is None else self.oracle_value,
            "agree": self.agree,
            "status": self.status,
            "millis": self.millis,
        }


@dataclass(frozen=True, slots=True)
class SweepSummary:
    agree: int
    disagree: int
    ledgered: int
    unproven: int
    oracle_millis_total: int
    oracle_millis_max: int

    @classmethod
    def from_rows(cls, rows: Iterable[SweepRow]) -> SweepSummary:
        rows = list(rows)
        statuses = [row.status for row in rows]
        millis = np.array([row.millis for row in rows if row.oracle_value is not None], dtype=np.int64)
        return cls(
            agree=statuses.count(AGREE),
            disagree=statuses.count(DISAGREE),
            ledgered=statuses.count(LEDGERED),
            unproven=statuses.count(UNPROVEN),
            oracle_millis_total=int(millis.sum()) if millis.size else 0,
            oracle_millis_max=int(millis.max()) if millis.size else 0,
        )

    @property
    def ok(self) -> bool:
        return self.disagree == 0

    def describe(self) -> str:
        return (
            f"agree={self.agree} disagree={self.disagree} "
            f"ledgered={self.ledgered} unproven={self.unproven}"
        )

    def to_payload(self) -> dict[str, int]:
        return {
            "agree": self.agree,
            "disagree": self.disagree,
            "ledgered": self.ledgered,
            "unproven": self.unproven,
            "oracle_millis_total": self.oracle_millis_total,
            "oracle_millis_max": self.oracle_millis_max,
        }


def sweep_row(
    n: int,
    m: int,
    k: int,
    *,
    budget: SolveBudget,
    threads: int = 1,
    allow_ledgered: bool = False,
    log_queue: multiprocessing.Queue[object] | None = None,
    logger: logging.Logger | None = None,
) -> SweepRow:
    log = logger or logging.getLogger("cli")
    value = formula(n, m, k)
    try:
        construction = build_construction(n, m, k, logger=logger)
    except RepairFailedError as error:
        log.warning("f_%dx%d k=%d: %s", n, m, k, error)
        construction = None

    oracle_value: int | None = None
    millis = 0
    if FlowerParams(n, m).vertex_count <= budget.max_vertices:
        result = min_paired_domination(
            flower(n, m),
            k,
            budget,
            threads=threads,
            incumbent=None if construction is None else construction.paired_set,
            log_queue=log_queue,
            logger=logger,
        )
        millis = result.millis
        if result.proven:
            oracle_value = result.optimum

    if oracle_value is None:
        status = UNPROVEN
    elif oracle_value == value:
        status = AGREE
    elif allow_ledgered and oracle_value in {alt for _, alt in ledgered_alternatives(n, m, k)}:
        status = LEDGERED
    else:
        status = DISAGREE
        log.warning("f_%dx%d k=%d: formula %d but solver proves %d", n, m, k, value, oracle_value)

    return SweepRow(
        n=n,
        m=m,
        k=k,
        formula_value=value,
        construction_size=None if construction is None else len(construction.paired_set),
        construction_literal=None if construction is None else construction.literal,
        oracle_value=oracle_value,
        status=status,
        millis=millis,
    )


def run_sweep(
    n_range: Iterable[int],
    m_range: Iterable[int],
    k: int,
    *,
    budget: SolveBudget,
    threads: int = 1,
    allow_ledgered: bool = False,
    log_queue: multiprocessing.Queue[object] | None = None,
    logger: logging.Logger | None = None,
) -> list[SweepRow]:
    m_values = list(m_range)
    return [
        sweep_row(
            n,
            m,
            k,
            budget=budget,
            threads=threads,
            allow_ledgered=allow_ledgered,
            log_queue=log_queue,
            logger=logger,
        )
        for n in n_range
        for m in m_values
    ]


def write_csv(rows: Iterable[SweepRow], stream: TextIO) -> None:
    writer = csv.DictWriter(stream, fieldnames=CSV_HEADER, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(row.to_csv_row())
