"""Deviation ledger: every point where a published set or line is read or repaired."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable


@dataclass(frozen=True, slots=True)
class LedgerEntry:
    id: str
    title: str
    detail: str

    def cite(self) -> str:
        return f"[{self.id}] {self.title}"


_ENTRIES = (
    LedgerEntry(
        "k1-conclusion",
        "distance-1 concluding lines for m = 1, 2 (mod 4) repeat 2*ceil((nm-2n)/4)",
        "Both derivations end at 2*ceil((nm-n)/4), which is the value the closed form uses. "
        "The oracle sweep agrees with 2*ceil((nm-n)/4).",
    ),
    LedgerEntry(
        "k2-conclusion",
        "distance-2 concluding line for m = 5 (mod 6) states 2*ceil((nm-5n)/6)",
        "The bounds on either side give 2*ceil((nm-3n)/6), matching the header row m = 0, 5 (mod 6).",
    ),
    LedgerEntry(
        "k2-case-label",
        "second distance-2 case headed m = 4 (mod 6) is read as m = 5 (mod 6)",
        "Its petal blocks use t = floor(m/6) with L = 6t + 3 interior vertices, "
        "which only fits m = 5 (mod 6).",
    ),
    LedgerEntry(
        "k2-m0-label",
        "distance-2, m = 0 (mod 6), even n: petal subcase labelled m = 6 is read as m != 6",
        "For m = 6 its petal block is empty and it coincides with the hub-only subcase.",
    ),
    LedgerEntry(
        "k1-m0-odd-range",
        "distance-1, m = 0 (mod 4), odd n: term {v(n,4j), v(n,4j+1)} has no range for j",
        "Completed as 1 <= j <= t-1, the only range giving formula cardinality.",
    ),
    LedgerEntry(
        "k1-m3-block-index",
        "distance-1, m = 3 (mod 4): third-petal term is indexed by l but ranged over i, j unbounded",
        "Read as l over the stated range and 1 <= j <= t.",
    ),
    LedgerEntry(
        "k2-m3-hub-index",
        "distance-2, m = 3 (mod 6): hub term {u(5l-4), u(5i-3)} mixes l and i",
        "Read as {u(5l-4), u(5l-3)}, the bound variable of the enclosing range.",
    ),
    LedgerEntry(
        "k2-m3-n6",
        "distance-2, m = 3 (mod 6): n = 6 falls under both the n = 4, 6 and the n = 5t+1 subcase",
        "The n = 4, 6 set leaves petal 5 undominated; the n = 5t+1 set verifies and is used.",
    ),
    LedgerEntry(
        "hub-wrap",
        "consecutive hub pairs wrap onto u1 when n = 1 modulo their period",
        "The last pair (u(n), u(n+1)) overlaps (u1, u2). The canonical layout pulls it back to "
        "(u(n-1), u(n)). Affects distance 1, m = 2 (mod 4), n = 1 (mod 4), n >= 9 and "
        "distance 2, m = 2 (mod 6), n = 1 (mod 6). For n = 5 the published special case "
        "is exactly this pull-back.",
    ),
    LedgerEntry(
        "k2-m5-n5",
        "distance-2, m = 5 (mod 6), n = 5: hub set {u1, u2, u3, u4} leaves v(5,2) undominated",
        "Replaced by the canonical layout, whose hub pairs are (u1, u2), (u4, u5).",
    ),
    LedgerEntry(
        "canonical-layout",
        "published set unavailable or invalid; canonical layout used",
        "Hub pairs by residue class, then a left-to-right greedy fill of every petal interior.",
    ),
    LedgerEntry(
        "petal-bound",
        "per-petal lower bound does not hold for every minimum set",
        "f(3x5), k = 1: {u_i, v(i,1) : i = 1..3} is a minimum paired dominating set "
        "with one interior vertex per petal, below the claimed 2. The bound is reported, not enforced.",
    ),
)

LEDGER: dict[str, LedgerEntry] = {entry.id: entry for entry in _ENTRIES}


def cite(entry_ids: Iterable[str]) -> str | None:
    """One-line citation for a set of ledger ids, None when there is nothing to cite."""
    seen = list(dict.fromkeys(entry_ids))
    if not seen:
        return None
    return "; ".join(LEDGER[entry_id].cite() for entry_id in seen)
