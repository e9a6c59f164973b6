"""Closed-form paired-domination numbers of flower graphs and the per-petal bound."""

from __future__ import annotations

from dataclasses import dataclass

from flower import FlowerParams

from .errors import UnsupportedDistanceError

SUPPORTED_DISTANCES = (1, 2)


def _ceil_div(numerator: int, denominator: int) -> int:
    return -(-numerator // denominator)


@dataclass(frozen=True, slots=True)
class FormulaCase:
    """Residue class of m that selects the closed form, and its value."""

    k: int
    modulus: int
    residue: int
    expression: str
    value: int
    blocks: int

    def to_payload(self) -> dict[str, object]:
        return {
            "k": self.k,
            "modulus": self.modulus,
            "residue": self.residue,
            "expression": self.expression,
            "value": self.value,
        }


def _distance_one_case(n: int, m: int) -> FormulaCase:
    residue = m % 4
    if residue == 0:
        expression, value = "2*ceil((nm-2n)/4)", 2 * _ceil_div(n * m - 2 * n, 4)
    elif residue in (1, 2):
        expression, value = "2*ceil((nm-n)/4)", 2 * _ceil_div(n * m - n, 4)
    else:
        expression, value = "2*ceil((3nm-5n)/12)", 2 * _ceil_div(3 * n * m - 5 * n, 12)
    return FormulaCase(1, 4, residue, expression, value, m // 4)


def _distance_two_case(n: int, m: int) -> FormulaCase:
    residue = m % 6
    if residue in (0, 5):
        expression, value = "2*ceil((nm-3n)/6)", 2 * _ceil_div(n * m - 3 * n, 6)
    elif residue in (1, 2):
        expression, value = "2*ceil((nm-n)/6)", 2 * _ceil_div(n * m - n, 6)
    elif residue == 3:
        expression, value = "2*ceil((5nm-9n)/30)", 2 * _ceil_div(5 * n * m - 9 * n, 30)
    else:
        expression, value = "2*ceil((2nm-5n)/12)", 2 * _ceil_div(2 * n * m - 5 * n, 12)
    return FormulaCase(2, 6, residue, expression, value, m // 6)


def formula_case(n: int, m: int, k: int) -> FormulaCase:
    FlowerParams(n, m)
    if k not in SUPPORTED_DISTANCES:
        raise UnsupportedDistanceError(
            f"closed forms exist only for k in {SUPPORTED_DISTANCES}, got k={k}."
        )
    if k == 1:
        return _distance_one_case(n, m)
    return _distance_two_case(n, m)


def formula(n: int, m: int, k: int) -> int:
    return formula_case(n, m, k).value


def gamma_p_formula(n: int, m: int) -> int:
    """Paired-domination number of f_{n x m}."""
    return formula_case(n, m, 1).value


def gamma_p2_formula(n: int, m: int) -> int:
    """2-distance paired-domination number of f_{n x m}."""
    return formula_case(n, m, 2).value


def petal_lower_bound(m: int, k: int) -> int:
    """Claimed minimum of set members inside each petal interior, clamped at 0."""
    span = 2 * (k + 1)
    return max(0, 2 * _ceil_div(m - span, span))


def ledgered_alternatives(n: int, m: int, k: int) -> tuple[tuple[str, int], ...]:
    """Values printed by concluding lines that disagree with the closed form.

    Each entry is (ledger id, value). Empty when the concluding line agrees.
    """
    case = formula_case(n, m, k)
    if k == 1 and case.residue in (1, 2):
        return (("k1-conclusion", 2 * _ceil_div(n * m - 2 * n, 4)),)
    if k == 2 and case.residue == 5:
        return (("k2-conclusion", 2 * _ceil_div(n * m - 5 * n, 6)),)
    return ()
