from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from fockcrystal.core import INFINITY, LPartition, OnWallError, lpartitions
from fockcrystal.crystal import build_graph, find_wall, m_order
from fockcrystal.walls import chamber_samples, crossing_path, essential_walls, signature, wall_cross

L = LPartition.of
M1, M2, M3, M4 = (0, -3), (0, -1), (0, 1), (0, 3)


def brute_walls(l, n, e, s):
    out = set()
    for i in range(1, l + 1):
        for j in range(i + 1, l + 1):
            for N in range(-50, 51):
                if abs(N * e + s[j - 1] - s[i - 1]) <= n:
                    out.add((i, j, N))
    return out


def test_essential_walls_example():
    walls = essential_walls(2, 3, 2, (0, 0))
    assert [w.N for w in walls] == [-1, 0, 1]
    assert sorted(w.offset for w in walls) == [-2, 0, 2]


@pytest.mark.parametrize("l, n, e, s", [(3, 2, 3, (0, 1, 5)), (2, 0, 2, (0, 0)), (2, 0, 3, (0, 1)), (3, 4, 2, (1, 0, 3))])
def test_essential_walls_match_enumeration(l, n, e, s):
    assert {(w.i, w.j, w.N) for w in essential_walls(l, n, e, s)} == brute_walls(l, n, e, s)


def test_essential_walls_level_three_list():
    walls = essential_walls(3, 2, 3, (0, 1, 5))
    # |3N + 1| <= 2, |3N + 5| <= 2, |3N + 4| <= 2 for the pairs (1,2), (1,3), (2,3)
    assert [(w.i, w.j, w.N) for w in walls] == [(1, 2, -1), (1, 2, 0), (1, 3, -2), (1, 3, -1), (2, 3, -2), (2, 3, -1)]


def test_essential_walls_infinite_e():
    assert [(w.i, w.j) for w in essential_walls(3, 2, INFINITY, (0, 1, 5))] == [(1, 2)]


def test_signature():
    walls = essential_walls(2, 3, 2, (0, 0))
    assert signature(M2, walls).signs == (1, -1, -1)
    assert signature((0, Fraction(-1, 2)), walls) == signature(M2, walls)
    with pytest.raises(OnWallError):
        signature((0, 2), walls)


def test_crossing_path_order():
    walls = essential_walls(2, 3, 2, (0, 0))
    assert crossing_path(M1, (0, Fraction(-5, 2)), walls) == []
    assert [c.wall.N for c in crossing_path(M1, M3, walls)] == [-1, 0]
    assert [c.wall.N for c in crossing_path(M1, M4, walls)] == [-1, 0, 1]
    assert [c.wall.N for c in crossing_path(M4, M1, walls)] == [1, 0, -1]


def test_crossing_path_with_simultaneous_crossings():
    # the straight segment meets (1,2,0) and (2,3,0) at the same time
    walls = essential_walls(3, 2, 2, (0, 0, 0))
    m, m2 = (0, Fraction(-1, 2), -1), (0, Fraction(1, 2), 1)
    path = crossing_path(m, m2, walls)
    ts = [c.t for c in path]
    assert len(set(ts)) == len(ts)
    assert {(c.wall.i, c.wall.j, c.wall.N) for c in path} == {(1, 2, 0), (1, 3, 0), (2, 3, 0)}


def test_wall_cross_table_examples():
    assert wall_cross(L("1", "2"), (0, 0), 2, M2, M4) == L("1", "1.1")
    assert wall_cross(L("3", "-"), (0, 0), 2, M1, M4) == L("-", "3")
    assert wall_cross(L("1", "2"), (0, 0), 2, M2, (0, Fraction(-1, 3))) == L("1", "2")


def test_wall_cross_reversal_exhaustive():
    for n in range(6):
        for lp in lpartitions(2, n):
            assert wall_cross(wall_cross(lp, (0, 0), 2, M1, M4), (0, 0), 2, M4, M1) == lp


def test_path_independence():
    for lp in lpartitions(2, 3):
        direct = wall_cross(lp, (0, 0), 2, M1, M4)
        via = wall_cross(wall_cross(lp, (0, 0), 2, M1, M2), (0, 0), 2, M2, M4)
        assert direct == via
    m, m2, mid = (0, Fraction(1, 3), Fraction(-7, 2)), (0, Fraction(-5, 3), Fraction(9, 4)), (0, Fraction(13, 5), Fraction(1, 7))
    for lp in lpartitions(3, 3):
        direct = wall_cross(lp, (0, 1, 0), 3, m, m2)
        assert direct == wall_cross(wall_cross(lp, (0, 1, 0), 3, m, mid), (0, 1, 0), 3, mid, m2)


def test_far_wall_is_identity():
    # with n = 2, e = 2, s = (0, 0) the wall m_2 - m_1 = 4 is not essential
    m, m2 = (0, Fraction(7, 2)), (0, Fraction(9, 2))
    g = build_graph(2, 2, 2, (0, 0), m_order(m))
    h = build_graph(2, 2, 2, (0, 0), m_order(m2))
    assert g.edge_set() == h.edge_set()
    for lp in lpartitions(2, 2):
        assert wall_cross(lp, (0, 0), 2, m, m2) == lp


def test_wall_cross_is_crystal_isomorphism():
    for k, m in enumerate((M1, M2, M3, M4)):
        g = build_graph(2, 3, 2, (0, 0), m_order(M1))
        h = build_graph(2, 3, 2, (0, 0), m_order(m))
        psi = {v: wall_cross(v, (0, 0), 2, M1, m, 3) for v in g.vertices}
        assert {(psi[a], psi[b], z) for a, b, z in g.edges} == h.edge_set()


def test_chamber_samples_small():
    samples = chamber_samples(2, 3, 2, (0, 0))
    assert len(samples) == 4
    assert len({sig for sig, _ in samples}) == 4
    samples = chamber_samples(3, 2, 3, (0, 1, 5), per_chamber=3)
    for sig, pts in samples:
        assert len(pts) == 3
        for m in pts:
            assert find_wall(m, (0, 1, 5), 3) is None
            assert signature(m, sig.walls) == sig


@settings(max_examples=80, deadline=None)
@given(st.tuples(st.fractions(-9, 9, max_denominator=11), st.fractions(-9, 9, max_denominator=11)))
def test_chamber_samples_cover_every_chamber(y):
    s = (0, 0, 1)
    walls = essential_walls(3, 3, 2, s)
    m = (Fraction(0),) + y
    if any(w.value(m) == 0 for w in walls):
        return
    assert signature(m, walls) in {sig for sig, _ in chamber_samples(3, 3, 2, s)}


def test_chamber_samples_without_essential_walls():
    # s itself lies on the wall m_2 - m_1 = 2, which is not essential for n = 1
    samples = chamber_samples(2, 1, INFINITY, (0, 2), per_chamber=2)
    assert len(samples) == 1
    for m in samples[0][1]:
        assert find_wall(m, (0, 2), INFINITY) is None
