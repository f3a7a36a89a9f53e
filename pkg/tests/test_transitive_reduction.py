import pytest
from conftest import sample, three_sets, hypergraphs
from hypothesis import given
from hypothesis import strategies as st

from hyperscc.errors import BadN, CyclicHypergraph, NotTransitive
from hyperscc.hypergraph import Hypergraph, image
from hyperscc.reachability import ReachRelation, reachability_relation
from hyperscc.setfamily import build_subset_hypergraph, lower_bound_family
from hyperscc.transitive_reduction import (
    Preorder,
    growth_experiment,
    is_topological_order,
    topological_sort,
    transitive_reduction,
    transitive_reduction_size,
)

CYCLE3 = Hypergraph.from_arcs(3, [([0], [1]), ([1], [2]), ([2], [0])])
CHAIN3 = Hypergraph.from_arcs(3, [([0], [1]), ([1], [2])])


def reduce(h: Hypergraph):
    return transitive_reduction(Preorder(reachability_relation(h)), check=True)


def test_cycle():
    red = reduce(CYCLE3)
    assert red.pairs == {(0, 1), (1, 2), (2, 0)}
    assert transitive_reduction_size(CYCLE3) == 3


def test_chain():
    closed = Hypergraph.from_arcs(3, [([0], [1]), ([1], [2]), ([0], [2])])
    assert reduce(closed).pairs == {(0, 1), (1, 2)}


def test_three_sets_cover_pairs():
    red = reduce(build_subset_hypergraph(three_sets()).hypergraph)
    assert (0, 2) in red.pairs and (1, 2) in red.pairs


def test_empty_and_lower_bound_sizes():
    assert transitive_reduction_size(Hypergraph(4)) == 0
    h8 = build_subset_hypergraph(lower_bound_family(8)).hypergraph
    assert transitive_reduction_size(h8) >= 36


def test_not_transitive():
    rel = ReachRelation(3, (0b011, 0b110, 0b100))
    with pytest.raises(NotTransitive):
        Preorder.of(rel)
    with pytest.raises(NotTransitive):
        transitive_reduction(Preorder(rel), check=True)


def test_topological_sort():
    assert topological_sort(CHAIN3) == [0, 1, 2]
    with pytest.raises(CyclicHypergraph):
        topological_sort(sample())
    h = build_subset_hypergraph(three_sets()).hypergraph
    order = topological_sort(h)
    pos = {v: i for i, v in enumerate(order)}
    assert pos[0] < pos[2] and pos[1] < pos[2]
    assert all(pos[2] < pos[x] for x in (3, 4))
    assert is_topological_order(h, order)


def test_growth():
    rows = growth_experiment([4, 8, 12])
    assert [r.poset_pairs for r in rows] == [4, 36, 400]
    assert all(r.reduction_size >= r.poset_pairs for r in rows)
    assert rows[0].ratio < rows[1].ratio < rows[2].ratio
    for bad in ([3], [20], [0]):
        with pytest.raises(BadN):
            growth_experiment(bad)


@given(hypergraphs(max_vertices=10, max_arcs=14))
def test_closure_round_trip(h):
    rel = reachability_relation(h)
    red = transitive_reduction(Preorder(rel), check=True)
    assert red.closure() == rel


@given(hypergraphs(max_vertices=9, max_arcs=12), st.randoms(use_true_random=False))
def test_size_invariant_under_relabeling(h, rnd):
    perm = list(range(h.vertex_count))
    rnd.shuffle(perm)
    assert transitive_reduction_size(image(h, perm, h.vertex_count)) == transitive_reduction_size(h)


@given(hypergraphs(max_vertices=10, max_arcs=14))
def test_reduction_is_minimal_per_pair(h):
    rel = reachability_relation(h)
    red = transitive_reduction(Preorder(rel))
    for p in red.pairs:
        shrunk = type(red)(red.vertex_count, red.pairs - {p})
        assert shrunk.closure() != rel


@given(hypergraphs(max_vertices=10, max_arcs=14))
def test_toposort_predicate(h):
    try:
        order = topological_sort(h)
    except CyclicHypergraph:
        classes = Preorder(reachability_relation(h)).classes()
        assert any(len(c) > 1 for c in classes)
        return
    assert is_topological_order(h, order)
