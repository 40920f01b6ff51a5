import json

import pytest
from hypothesis import given, strategies as st

from fockcrystal.core import (
    EMPTY,
    INFINITY,
    ConfigurationError,
    LPartition,
    Node,
    Partition,
    Residue,
    addable_nodes,
    content,
    lpartitions,
    lpartitions_upto,
    parse_modulus,
    partitions,
    removable_nodes,
    residue,
)
from oracles import box_scan_addable, box_scan_removable

partition_st = st.lists(st.integers(0, 6), max_size=6).map(lambda xs: Partition(tuple(sorted(xs, reverse=True))))
lpartition_st = st.integers(1, 3).flatmap(lambda l: st.tuples(*[partition_st] * l)).map(LPartition)
charge_st = st.lists(st.integers(-4, 4), min_size=3, max_size=3)
modulus_st = st.sampled_from([2, 3, 4, 5, INFINITY])


def test_partition_canonical_form():
    assert Partition((3, 1, 0, 0)) == Partition((3, 1))
    assert str(Partition((3, 1, 0))) == "3.1"
    assert str(EMPTY) == "-"
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, -1))


def test_partition_rank_and_transpose():
    lam = Partition.parse("6.5.5.4")
    assert lam.rank() == 20
    assert lam.transpose() == Partition((4, 4, 4, 4, 3, 1))
    assert lam.transpose().transpose() == lam


@given(partition_st)
def test_parse_print_idempotent(lam):
    text = str(lam)
    assert str(Partition.parse(text)) == text
    assert Partition.parse(text) == lam


def test_lpartition_json_round_trip():
    lp = LPartition.from_json("[[6,5,5,4],[5,5,3,3,2]]")
    assert lp.to_json() == [[6, 5, 5, 4], [5, 5, 3, 3, 2]]
    assert LPartition.from_json(json.dumps(lp.to_json())) == lp
    assert str(lp) == "(6.5.5.4, 5.5.3.3.2)"
    assert LPartition.empty(3).rank() == 0
    with pytest.raises(ValueError):
        LPartition.from_json('{"a": 1}')


def test_node_membership_and_content():
    lp = LPartition.of("3.1", "2.2.1.1")
    assert lp.contains(Node(1, 3, 1))
    assert not lp.contains(Node(2, 2, 1))
    assert content(Node(1, 1, 1), (0, 3)) == 0
    assert content(Node(2, 3, 2), (0, 3)) == 4
    assert residue(Node(2, 3, 2), (0, 3), 3) == Residue(3, 1)
    assert content(Node(4, 6, 1), (0, 3)) == 2
    assert residue(Node(4, 6, 1), (0, 3), 3) == Residue(3, 2)
    with pytest.raises(ConfigurationError):
        content(Node(1, 1, 3), (0, 3))


def test_residue_equality_is_congruence():
    assert Residue(3, 5) == Residue(3, 2)
    assert Residue(3, 2) != Residue(4, 2)
    assert Residue(INFINITY, 5) != Residue(INFINITY, 2)


def test_addable_examples():
    assert set(addable_nodes(LPartition.empty(2), (0, 0), 2, 0)) == {Node(1, 1, 1), Node(1, 1, 2)}
    lp = LPartition.of("3.1", "2.2.1.1")
    by_res = {z: set(addable_nodes(lp, (0, 3), 3, z)) for z in range(3)}
    assert by_res[0] == {Node(1, 4, 1), Node(2, 2, 1)}
    assert by_res[1] == {Node(3, 1, 1)}
    assert by_res[2] == {Node(1, 3, 2), Node(3, 2, 2), Node(5, 1, 2)}
    assert addable_nodes(LPartition.of("1", "-"), (0, 0), INFINITY, 1) == [Node(1, 2, 1)]


def test_removable_examples():
    assert removable_nodes(LPartition.empty(2), (0, 0), 2, 0) == []
    lp = LPartition.of("3.1", "2.2.1.1")
    # (2,1,1) has content -1, also residue 2
    assert set(removable_nodes(lp, (0, 3), 3, Residue(3, 2))) == {Node(1, 3, 1), Node(2, 1, 1)}
    assert set(removable_nodes(lp, (0, 3), 3, 2)) == box_scan_removable(lp, (0, 3), 3, 2)
    assert set(removable_nodes(LPartition.of("1", "1"), (0, 0), 2, 0)) == {Node(1, 1, 1), Node(1, 1, 2)}


def test_level_and_modulus_errors():
    with pytest.raises(ConfigurationError):
        addable_nodes(LPartition.empty(2), (0,), 2, 0)
    with pytest.raises(ConfigurationError):
        addable_nodes(LPartition.empty(1), (0,), 2, Residue(3, 0))
    with pytest.raises(ConfigurationError):
        parse_modulus("1")
    assert parse_modulus("inf") is INFINITY


def test_enumeration_counts():
    assert [len(partitions(n)) for n in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]
    assert [len(lpartitions(2, n)) for n in range(4)] == [1, 2, 5, 10]
    assert len(lpartitions_upto(2, 3)) == 18
    assert all(lp.rank() == 4 for lp in lpartitions(3, 4))


@given(lpartition_st, charge_st, modulus_st, st.integers(-6, 6))
def test_nodes_match_box_scan(lp, s, e, z):
    s = s[: lp.level]
    add = set(addable_nodes(lp, s, e, z))
    rem = set(removable_nodes(lp, s, e, z))
    assert add == box_scan_addable(lp, s, e, z)
    assert rem == box_scan_removable(lp, s, e, z)
    assert not add & rem
    for g in add:
        bigger = lp.add(g)
        assert bigger.rank() == lp.rank() + 1
        assert g in removable_nodes(bigger, s, e, z)
        assert bigger.remove(g) == lp
