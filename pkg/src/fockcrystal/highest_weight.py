"""Highest-weight detection by deleting e-periods from the l-row symbol."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple, Sequence

from .core import INFINITY, ConfigurationError, LPartition, as_charge, as_vector, check_modulus
from .crystal import inverse_permutation, jmmo_decompose
from .symbols import Symbol, general_symbol, minimal_width


class Box(NamedTuple):
    row: int  # 1-indexed, bottom row is 1
    pos: int  # 0-indexed position in the row
    entry: int


@dataclass(frozen=True)
class PeriodCandidate:
    boxes: tuple[Box, ...]

    @property
    def entries(self) -> tuple[int, ...]:
        return tuple(b.entry for b in self.boxes)


def _search_period(members: list[set], k: int, e: int, rank: Sequence[int]) -> list[tuple[int, int]] | None:
    """(row, entry) pairs of the admissible period with the least rank sequence."""
    by_rank = sorted(range(1, len(members) + 1), key=lambda r: rank[r - 1])

    def search(step: int, bound: int):
        if step == e:
            return []
        x = k - step
        for r in by_rank:
            if rank[r - 1] > bound:
                break
            if x in members[r - 1]:
                rest = search(step + 1, rank[r - 1])
                if rest is not None:
                    return [(r, x)] + rest
        return None

    return search(0, len(members))


def find_e_period(sym: Symbol, e: int, sigma: Sequence[int]) -> PeriodCandidate | None:
    """The e-period starting at the largest entry whose row ranks are lexicographically least.

    Rows are ranked by sigma^{-1}; along a period the ranks must not increase.
    Among all admissible periods the one with the smallest rank sequence is
    returned (depth-first search trying small ranks first).
    """
    check_modulus(e)
    if e is INFINITY:
        raise ConfigurationError("e-periods need a finite e")
    nonempty = [row for row in sym.rows if row]
    if not nonempty:
        return None
    k = max(row[-1] for row in nonempty)
    found = _search_period([set(row) for row in sym.rows], k, e, inverse_permutation(sigma))
    if found is None:
        return None
    return PeriodCandidate(tuple(Box(r, sym.rows[r - 1].index(x), x) for r, x in found))


def delete_period(sym: Symbol, period: PeriodCandidate) -> Symbol:
    drop = {(b.row, b.entry) for b in period.boxes}
    rows = tuple(
        tuple(x for x in row if (r, x) not in drop) for r, row in enumerate(sym.rows, start=1)
    )
    # row j keeps length s_j + u, so its charge drops with each deleted box
    charge = tuple(len(row) - sym.width for row in rows)
    return Symbol(rows, charge, sym.width)


def is_empty_symbol(sym: Symbol) -> bool:
    """True when every row is the run -u+1, -u+2, ... (possibly of length zero)."""
    start = -sym.width + 1
    return all(row == tuple(range(start, start + len(row))) for row in sym.rows)


@lru_cache(maxsize=256)
def _jmmo(m: tuple, s: tuple, e):
    return jmmo_decompose(as_vector(m), as_charge(s), e)


def reduction_trace(lp: LPartition, s, e, m, pad: int | None = None) -> tuple[list[Symbol], bool]:
    """Symbols met while deleting e-periods, and whether the last one is empty.

    The symbol is built with ``pad`` columns beyond the minimal width (default
    e). With the minimal width a period may be cut short on the left, e.g.
    ((1), -) with e = 4 and sigma = (2,1) has none although it is highest weight.
    """
    data = _jmmo(tuple(m), tuple(s), e)
    if lp.level != len(data.s_prime):
        raise ConfigurationError("charge length must equal the level")
    least = minimal_width(lp, data.s_prime)
    sym = general_symbol(lp, data.s_prime, least + (e if pad is None else pad))
    trace = [sym]
    while not is_empty_symbol(sym):
        period = find_e_period(sym, e, data.sigma)
        if period is None:
            return trace, False
        sym = delete_period(sym, period)
        trace.append(sym)
    return trace, True


def is_highest_weight(lp: LPartition, s, e, m) -> bool:
    """Same answer as ``reduction_trace(...)[1]``, working on plain sets of entries."""
    data = _jmmo(tuple(m), tuple(s), e)
    if lp.level != len(data.s_prime):
        raise ConfigurationError("charge length must equal the level")
    u = minimal_width(lp, data.s_prime) + e
    start = -u + 1
    rows = []
    for lam, sj in zip(lp.components, data.s_prime):
        parts = lam.parts
        rows.append({sj - k + (parts[k] if k < len(parts) else 0) for k in range(sj + u)})
    rank = inverse_permutation(data.sigma)
    while True:
        # entries never drop below start, so a row is the empty run iff its max fits
        if all(not r or max(r) == start + len(r) - 1 for r in rows):
            return True
        k = max(max(r) for r in rows if r)
        found = _search_period(rows, k, e, rank)
        if found is None:
            return False
        for r, x in found:
            rows[r - 1].discard(x)


def render_trace(trace: Sequence[Symbol]) -> str:
    return "\n\n".join(sym.render() for sym in trace)
