"""Golden examples checked by ``fockcrystal selftest``."""
from __future__ import annotations

from typing import Callable

from .core import LPartition, Partition
from .crystal import build_graph, jmmo_decompose, m_order
from .highest_weight import is_highest_weight, reduction_trace
from .symbols import general_symbol, match_rows, phi_bipartition, symbol_of_bipartition
from .walls import essential_walls, wall_cross

P = Partition.parse
L = LPartition.of

# representatives of the four chambers for e = 2, s = (0,0), n = 3
TABLE_POINTS = ((0, -3), (0, -1), (0, 1), (0, 3))
# each row lists one orbit across the four chambers; the flag marks highest weight rows
TABLE_ROWS = (
    (True, ("-", "1.1.1"), ("-", "1.1.1"), ("1.1.1", "-"), ("1.1.1", "-")),
    (False, ("-", "2.1"), ("-", "2.1"), ("2.1", "-"), ("2.1", "-")),
    (True, ("-", "3"), ("1.1.1", "-"), ("-", "1.1.1"), ("3", "-")),
    (False, ("1", "1.1"), ("1", "1.1"), ("1.1", "1"), ("1.1", "1")),
    (False, ("1", "2"), ("-", "3"), ("3", "-"), ("2", "1")),
    (True, ("1.1", "1"), ("1", "2"), ("2", "1"), ("1", "1.1")),
    (False, ("1.1.1", "-"), ("1.1", "1"), ("1", "1.1"), ("-", "1.1.1")),
    (False, ("2", "1"), ("2", "1"), ("1", "2"), ("1", "2")),
    (False, ("2.1", "-"), ("2.1", "-"), ("-", "2.1"), ("-", "2.1")),
    (False, ("3", "-"), ("3", "-"), ("-", "3"), ("-", "3")),
)


def check_rmatrix() -> bool:
    sym = symbol_of_bipartition(P("6.5.5.4"), P("5.5.3.3.2"), 0, 3)
    return (
        sym.width == 7
        and sym.rows == ((-4, 1, 3, 4, 6), (-4, -3, -2, 1, 3, 4, 7, 8))
        and match_rows(sym) == [-4, 1, 3, 4, -2]
        and phi_bipartition(P("6.5.5.4"), P("5.5.3.3.2"), 0, 3) == (P("4.4.3.1"), P("5.5.5.4.4.3"))
    )


def check_table() -> bool:
    if len(essential_walls(2, 3, 2, (0, 0))) != 3:
        return False
    for _, *cells in TABLE_ROWS:
        lps = [L(*c) for c in cells]
        for k, m in enumerate(TABLE_POINTS):
            if wall_cross(lps[0], (0, 0), 2, TABLE_POINTS[0], m) != lps[k]:
                return False
    for k, m in enumerate(TABLE_POINTS):
        g = build_graph(2, 3, 2, (0, 0), m_order(m))
        hw = {v for v in g.highest_weight_vertices() if v.rank() == 3}
        if hw != {L(*row[k + 1]) for row in TABLE_ROWS if row[0]}:
            return False
    return True


def check_highest_weight() -> bool:
    lp = L("3.1", "2.2.1.1")
    trace, ok = reduction_trace(lp, (0, 0), 3, (1, 3), pad=0)
    rows = [sym.rows for sym in trace]
    return (
        ok
        and rows[0] == ((-2, 0, 3), (-2, -1, 1, 2, 4, 5))
        and rows[1:] == [((-2, 0), (-2, -1, 1, 2)), ((-2,), (-2, -1))]
        and not is_highest_weight(lp, (0, 0), 3, (0, 4))
    )


def check_jmmo() -> bool:
    a = jmmo_decompose((1, 3), (0, 0), 3)
    b = jmmo_decompose((0, 4), (0, 0), 3)
    return (
        a.s_prime == (0, 3) and a.delta == (1, 0) and a.sigma == (1, 2)
        and b.s_prime == (0, 3) and b.delta == (0, 1) and b.sigma == (2, 1)
        and general_symbol(L("3.1", "2.2.1.1"), (0, 3)).rows == ((-2, 0, 3), (-2, -1, 1, 2, 4, 5))
    )


CHECKS: dict[str, Callable[[], bool]] = {
    "r-matrix example": check_rmatrix,
    "e=2 n=3 wall-crossing table": check_table,
    "highest-weight reduction": check_highest_weight,
    "JMMO decomposition": check_jmmo,
}


def run_all() -> list[tuple[str, bool]]:
    return [(name, bool(fn())) for name, fn in CHECKS.items()]
