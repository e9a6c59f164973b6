"""Closed-form values and constructive sets for (2-distance) paired domination of flowers."""

from .errors import ConstructionError, RepairFailedError, UnsupportedDistanceError
from .formulas import (
    SUPPORTED_DISTANCES,
    FormulaCase,
    formula,
    formula_case,
    gamma_p2_formula,
    gamma_p_formula,
    ledgered_alternatives,
    petal_lower_bound,
)
from .layouts import HubLayout, canonical_pairs, fill_petals, hub_layout, hub_pairs
from .ledger import LEDGER, LedgerEntry, cite
from .literal import LiteralCandidate, literal_candidates
from .service import (
    ConstructionResult,
    build_2distance_set,
    build_construction,
    build_paired_set,
)

__all__ = [
    "ConstructionError",
    "ConstructionResult",
    "FormulaCase",
    "HubLayout",
    "LEDGER",
    "LedgerEntry",
    "LiteralCandidate",
    "RepairFailedError",
    "SUPPORTED_DISTANCES",
    "UnsupportedDistanceError",
    "build_2distance_set",
    "build_construction",
    "build_paired_set",
    "canonical_pairs",
    "cite",
    "fill_petals",
    "formula",
    "formula_case",
    "gamma_p2_formula",
    "gamma_p_formula",
    "hub_layout",
    "hub_pairs",
    "ledgered_alternatives",
    "literal_candidates",
    "petal_lower_bound",
]
