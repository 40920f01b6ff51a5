"""Symbols of multipartitions and the canonical bipartition isomorphisms.

A symbol stores one strictly increasing row of charged beta-numbers per
component; ``rows[0]`` is component 1 (the bottom row when printed).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import (
    INFINITY,
    ConfigurationError,
    LPartition,
    OnWallError,
    Partition,
    as_charge,
    as_vector,
    check_modulus,
)
from .crystal import find_wall, wall_value


@dataclass(frozen=True)
class Symbol:
    rows: tuple[tuple[int, ...], ...]
    charge: tuple[int, ...]
    width: int  # d for the two-row form, u for the general form

    def __post_init__(self):
        for row in self.rows:
            if any(x >= y for x, y in zip(row, row[1:])):
                raise ValueError(f"symbol rows must be strictly increasing: {row}")

    def partition(self) -> LPartition:
        return LPartition(tuple(_decode_row(row, s) for row, s in zip(self.rows, self.charge)))

    def render(self) -> str:
        """Rows printed top (last component) to bottom, left aligned."""
        cells = [[str(x) for x in row] for row in self.rows]
        w = max((len(c) for row in cells for c in row), default=1)
        return "\n".join(" ".join(c.rjust(w) for c in row) for row in reversed(cells))


def _decode_row(row: Sequence[int], s: int) -> Partition:
    # k-th largest entry is s - k + 1 + lambda_k
    desc = sorted(row, reverse=True)
    return Partition(tuple(x - s + k for k, x in enumerate(desc)))


def _row(lam: Partition, s: int, length: int) -> tuple[int, ...]:
    return tuple(sorted(s - k + lam.part(k + 1) for k in range(length)))


def symbol_of_bipartition(lam1, lam2, s1: int, s2: int) -> Symbol:
    """Two-row symbol with minimal d >= |s1 - s2| such that both rows end on a zero part."""
    lam1, lam2 = _as_partition(lam1), _as_partition(lam2)
    gap = abs(s1 - s2)
    d = gap
    if s2 >= s1:
        # top row: d+1 entries for lam2; bottom row: d+1-gap entries for lam1
        while lam2.part(d + 1) or lam1.part(d + 1 - gap):
            d += 1
        return Symbol((_row(lam1, s1, d + 1 - gap), _row(lam2, s2, d + 1)), (s1, s2), d)
    while lam1.part(d + 1) or lam2.part(d + 1 - gap):
        d += 1
    return Symbol((_row(lam1, s1, d + 1), _row(lam2, s2, d + 1 - gap)), (s1, s2), d)


def _as_partition(x) -> Partition:
    if isinstance(x, Partition):
        return x
    if isinstance(x, str):
        return Partition.parse(x)
    return Partition(tuple(x))


def match_rows(sym: Symbol) -> list[int]:
    """The matched entries y_1, y_2, ... in the order they are produced."""
    L1, L2 = sym.rows
    s1, s2 = sym.charge
    if s2 >= s1:
        pool, seq = sorted(L2), sorted(L1)
        matched = []
        for x in seq:
            below = [z for z in pool if z <= x]
            y = max(below) if below else max(pool)
            pool.remove(y)
            matched.append(y)
        return matched
    pool, seq = sorted(L1), sorted(L2)
    matched = []
    for x in seq:
        above = [z for z in pool if z >= x]
        y = min(above) if above else min(pool)
        pool.remove(y)
        matched.append(y)
    return matched


def match_and_swap(sym: Symbol) -> Symbol:
    """Replace the shorter row by its matched partners; the longer row absorbs the old shorter row."""
    if len(sym.rows) != 2:
        raise ConfigurationError("match_and_swap acts on two-row symbols")
    L1, L2 = sym.rows
    s1, s2 = sym.charge
    ys = match_rows(sym)
    if s2 >= s1:
        rest = sorted(set(L2) - set(ys))
        new1, new2 = tuple(sorted(ys)), tuple(sorted(rest + list(L1)))
    else:
        rest = sorted(set(L1) - set(ys))
        new1, new2 = tuple(sorted(rest + list(L2))), tuple(sorted(ys))
    assert len(new1) == len(L1) and len(new2) == len(L2)
    return Symbol((new1, new2), sym.charge, sym.width)


def phi_bipartition(lam1, lam2, s1: int, s2: int) -> tuple[Partition, Partition]:
    """Canonical g_infinity-crystal isomorphism from the m+ side to the m- side of the wall."""
    out = match_and_swap(symbol_of_bipartition(lam1, lam2, s1, s2)).partition()
    return out[1], out[2]


def flip(lam1, lam2) -> tuple:
    return lam2, lam1


def r_matrix(lam1, lam2, s1: int, s2: int) -> tuple[Partition, Partition]:
    mu1, mu2 = phi_bipartition(lam1, lam2, s1, s2)
    return mu2, mu1


def phi_bipartition_inverse(lam1, lam2, s1: int, s2: int) -> tuple[Partition, Partition]:
    return r_matrix(*flip(_as_partition(lam1), _as_partition(lam2)), s2, s1)


# ---------------------------------------------------------------- l components


def _pair_map(lp: LPartition, i: int, j: int, si: int, sj: int, forward: bool) -> LPartition:
    fn = phi_bipartition if forward else phi_bipartition_inverse
    mu_i, mu_j = fn(lp[i], lp[j], si, sj)
    comps = list(lp.components)
    comps[i - 1], comps[j - 1] = mu_i, mu_j
    return LPartition(tuple(comps))


def _check_wall_pair(l: int, i: int, j: int) -> None:
    if not (1 <= i < j <= l):
        raise ConfigurationError(f"wall indices must satisfy 1 <= i < j <= l, got ({i}, {j})")


def phi_infinity_wall(lp: LPartition, s, m, m2, wall: tuple[int, int]) -> LPartition:
    """Cross the e = infinity wall m_{i,j} from m to m2, changing only components i and j."""
    s, m, m2 = as_charge(s), as_vector(m), as_vector(m2)
    i, j = wall
    _check_wall_pair(lp.level, i, j)
    if not (len(s) == len(m) == len(m2) == lp.level):
        raise ConfigurationError("s, m, m2 must all have length l")
    here, there = -wall_value(m, s, i, j), -wall_value(m2, s, i, j)
    if here == 0 or there == 0:
        raise OnWallError(f"endpoint lies on the wall m_{{{i},{j}}}")
    if (here > 0) == (there > 0):
        raise ConfigurationError(f"m and m2 lie on the same side of the wall m_{{{i},{j}}}")
    return _pair_map(lp, i, j, s[i - 1], s[j - 1], forward=here > 0)


def shifted_charge(s, i: int, N: int, e: int) -> tuple[int, ...]:
    out = list(as_charge(s))
    out[i - 1] -= N * e
    return tuple(out)


def psi_single_wall_finite_e(lp: LPartition, s, e, m, m2, wall: tuple[int, int, int]) -> LPartition:
    """Cross the single wall m_{i,j,N} between m and m2 (either orientation)."""
    check_modulus(e)
    if e is INFINITY:
        return phi_infinity_wall(lp, s, m, m2, wall[:2])
    i, j, N = wall
    s_tilde = shifted_charge(s, i, N, e)
    return phi_infinity_wall(lp, s_tilde, m, m2, (i, j))


def is_generic(m, s, e) -> bool:
    return find_wall(as_vector(m), as_vector(s), e) is None


def minimal_width(lp: LPartition, s_prime: Sequence[int]) -> int:
    """Least u with every row length s'_j + u >= 1 and lambda^j_{u + s'_j} = 0."""
    return max(max(1, len(lam) + 1) - sj for lam, sj in zip(lp.components, s_prime))


def general_symbol(lp: LPartition, s_prime: Sequence[int], u: int | None = None) -> Symbol:
    """l-row symbol: row j lists s'_j + lambda^j_1, s'_j - 1 + lambda^j_2, ... down to -u + 1 + ...

    ``u`` defaults to the least value with every row of length >= 1 ending on a
    zero part; a larger ``u`` pads every row on the left.
    """
    s_prime = as_charge(s_prime)
    if len(s_prime) != lp.level:
        raise ConfigurationError("charge length must equal the level")
    least = minimal_width(lp, s_prime)
    if u is None:
        u = least
    elif u < least:
        raise ConfigurationError(f"width u={u} is below the minimum {least}")
    rows = tuple(_row(lp[c], sj, sj + u) for c, sj in enumerate(s_prime, start=1))
    return Symbol(rows, s_prime, u)


__all__ = [
    "Symbol",
    "symbol_of_bipartition",
    "match_rows",
    "match_and_swap",
    "phi_bipartition",
    "phi_bipartition_inverse",
    "flip",
    "r_matrix",
    "phi_infinity_wall",
    "psi_single_wall_finite_e",
    "general_symbol",
    "minimal_width",
    "shifted_charge",
]
