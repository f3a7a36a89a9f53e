import pytest
from hypothesis import given
from hypothesis import strategies as st

from hyperscc.errors import DoubleInit, MergeSameClass, NotRepresentative
from hyperscc.unionfind import UnionFind


def fresh(n: int) -> UnionFind:
    uf = UnionFind(n)
    for u in range(n):
        uf.make_set(u)
    return uf


def test_make_set_and_find():
    uf = fresh(3)
    assert uf.makeset_calls == 3
    assert uf.find(0) == 0
    with pytest.raises(DoubleInit):
        uf.make_set(0)


def test_find_uninitialized():
    uf = UnionFind(2)
    with pytest.raises(KeyError):
        uf.find(1)


def test_merge_tie_break_and_errors():
    uf = fresh(4)
    assert uf.merge(1, 0) == 0
    assert uf.find(1) == uf.find(0) == 0
    # rank 1 beats rank 0 whatever the ids
    assert uf.merge(3, 0) == 0
    with pytest.raises(MergeSameClass):
        uf.merge(2, 2)
    with pytest.raises(NotRepresentative):
        uf.merge(1, 2)
    assert uf.merge_calls == 2


def test_merging_three_like_the_trace():
    uf = fresh(6)
    r = uf.merge(2, 1)
    r = uf.merge(r, 0)
    assert uf.find(0) == uf.find(1) == uf.find(2) == r
    assert uf.classes() == [[0, 1, 2], [3], [4], [5]]


def test_chain_compresses():
    uf = fresh(8)
    r = 0
    for v in range(1, 8):
        r = uf.merge(r, v)
    assert all(uf.find(v) == r for v in range(8))
    assert uf.merge_calls == 7


ops = st.lists(st.tuples(st.integers(0, 9), st.integers(0, 9)), max_size=40)


@given(ops)
def test_partition_matches_naive_quotient(pairs):
    n = 10
    uf = fresh(n)
    label = list(range(n))
    merges = 0
    for a, b in pairs:
        ra, rb = uf.find(a), uf.find(b)
        if ra == rb:
            continue
        uf.merge(ra, rb)
        merges += 1
        old, new = label[b], label[a]
        label = [new if x == old else x for x in label]
    groups: dict[int, list[int]] = {}
    for v, lab in enumerate(label):
        groups.setdefault(lab, []).append(v)
    assert uf.classes() == sorted(groups.values())
    assert uf.merge_calls == merges <= n - 1
    for v in range(n):
        assert uf.find(uf.find(v)) == uf.find(v)


@given(ops)
def test_counters_monotone(pairs):
    uf = fresh(10)
    last = (0, 0)
    for a, b in pairs:
        ra, rb = uf.find(a), uf.find(b)
        if ra != rb:
            uf.merge(ra, rb)
        now = (uf.find_calls, uf.merge_calls)
        assert now >= last
        last = now
    with pytest.raises(AttributeError):
        uf.find_calls = 0
