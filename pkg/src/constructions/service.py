"""Constructive paired sets of formula cardinality, literal where possible."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any

from domination import PairedSet, is_k_paired_dominating
from flower import flower

from .errors import RepairFailedError
from .formulas import FormulaCase, formula_case
from .layouts import canonical_pairs, hub_layout
from .ledger import cite
from .literal import literal_candidates


@dataclass(frozen=True, slots=True)
class ConstructionResult:
    """Verified set whose size equals the closed-form value."""

    paired_set: PairedSet
    formula_value: int
    literal: bool
    case: FormulaCase
    source: str
    ledger_ids: tuple[str, ...] = ()

    @property
    def ledger_note(self) -> str | None:
        return cite(self.ledger_ids)

    @property
    def k(self) -> int:
        return self.case.k

    def to_payload(self) -> dict[str, Any]:
        return {
            **self.paired_set.to_payload(),
            "formula": self.formula_value,
            "literal": self.literal,
            "ledger": self.ledger_note,
        }


def build_construction(
    n: int,
    m: int,
    k: int,
    *,
    logger: logging.Logger | None = None,
) -> ConstructionResult:
    log = logger or logging.getLogger("constructions")
    case = formula_case(n, m, k)
    g = flower(n, m)
    failed_ids: list[str] = []

    for candidate in literal_candidates(n, m, k):
        paired_set = PairedSet.from_pairs(candidate.pairs)
        diagnostic = is_k_paired_dominating(g, paired_set, k)
        if diagnostic.valid and len(paired_set) == case.value:
            ledger_ids = (*failed_ids, *candidate.completions, *candidate.notes)
            return ConstructionResult(
                paired_set=paired_set,
                formula_value=case.value,
                literal=not failed_ids and not candidate.completions,
                case=case,
                source=candidate.label,
                ledger_ids=ledger_ids,
            )
        log.debug(
            "Published set %s for f_%dx%d k=%d rejected: failure=%s witness=%s size=%d formula=%d",
            candidate.label,
            n,
            m,
            k,
            diagnostic.failure,
            diagnostic.witness,
            len(paired_set),
            case.value,
        )
        failed_ids.extend(
            entry_id for entry_id in (candidate.on_failure, *candidate.notes) if entry_id
        )

    paired_set = PairedSet.from_pairs(canonical_pairs(g, k))
    diagnostic = is_k_paired_dominating(g, paired_set, k)
    if not diagnostic.valid or len(paired_set) != case.value:
        raise RepairFailedError(
            f"no valid set of size {case.value} for f_{n}x{m}, k={k}: canonical layout gives "
            f"size {len(paired_set)}, failure={diagnostic.failure}, witness={diagnostic.witness}."
        )
    layout = hub_layout(m, k).describe()
    log.debug("Using canonical layout %s for f_%dx%d k=%d", layout, n, m, k)
    return ConstructionResult(
        paired_set=paired_set,
        formula_value=case.value,
        literal=False,
        case=case,
        source=f"canonical layout {layout}",
        ledger_ids=(*failed_ids, "canonical-layout"),
    )


def build_paired_set(n: int, m: int) -> ConstructionResult:
    return build_construction(n, m, 1)


def build_2distance_set(n: int, m: int) -> ConstructionResult:
    return build_construction(n, m, 2)
