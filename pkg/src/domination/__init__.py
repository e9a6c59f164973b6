"""k-distance (paired) domination checks, matching and pair classification."""

from .classify import PairClassification, classify_pairs, edge_type, pair_coverage
from .errors import DominationError, PairedSetFormatError
from .matching import EXHAUSTIVE_LIMIT, exhaustive_matching_size, has_perfect_matching, max_matching
from .paired_set import PairedSet, VertexPair
from .verify import (
    EMPTY,
    FAILURE_CODES,
    NOT_DOMINATING,
    PAIR_NOT_EDGE,
    PAIR_OVERLAP,
    PAIRING_MISMATCH,
    PARITY,
    UNKNOWN_VERTEX,
    Diagnostic,
    is_k_dominating,
    is_k_paired_dominating,
    undominated,
)

__all__ = [
    "Diagnostic",
    "DominationError",
    "EMPTY",
    "EXHAUSTIVE_LIMIT",
    "FAILURE_CODES",
    "NOT_DOMINATING",
    "PAIRING_MISMATCH",
    "PAIR_NOT_EDGE",
    "PAIR_OVERLAP",
    "PARITY",
    "PairClassification",
    "PairedSet",
    "PairedSetFormatError",
    "UNKNOWN_VERTEX",
    "VertexPair",
    "classify_pairs",
    "edge_type",
    "exhaustive_matching_size",
    "has_perfect_matching",
    "is_k_dominating",
    "is_k_paired_dominating",
    "max_matching",
    "pair_coverage",
    "undominated",
]
