"""Invariants of the graph operations, checked on generated graphs."""

from hypothesis import assume, given, settings
from hypothesis import strategies as st

from weakdiam2.construct import build_O
from weakdiam2.digraph import (
    OrientedGraph,
    delete_vertex,
    is_absolute_clique,
    is_source,
    merge,
    push,
    push_all,
    sees,
    shrink_step,
    unseen_pairs,
    weak_diameter,
)

from .conftest import oriented_graphs


@given(oriented_graphs(min_n=1), st.data())
def test_push_is_an_involution(g, data):
    v = data.draw(st.integers(0, g.n - 1))
    h = push(g, v)
    h.check_invariants()
    assert push(h, v) == g
    assert h.num_arcs == g.num_arcs


@given(oriented_graphs())
def test_diameter_two_iff_clique(g):
    assert (weak_diameter(g) <= 2) == is_absolute_clique(g)


@given(oriented_graphs(min_n=2))
def test_clique_check_matches_pairwise_sees(g):
    pairwise = all(sees(g, u, v) for u in range(g.n) for v in range(u + 1, g.n))
    assert pairwise == is_absolute_clique(g)


@given(oriented_graphs(min_n=1, max_n=10), st.data())
def test_merge_keeps_orientation(g, data):
    # append a vertex y, non-adjacent to x, that agrees with x wherever both are adjacent
    x = data.draw(st.integers(0, g.n - 1))
    y = g.n
    arcs = list(g.arcs())
    for w in range(g.n):
        if w == x:
            continue
        if g.has_arc(x, w):
            options = ["none", "out"]
        elif g.has_arc(w, x):
            options = ["none", "in"]
        else:
            options = ["none", "out", "in"]
        pick = data.draw(st.sampled_from(options))
        if pick == "out":
            arcs.append((y, w))
        elif pick == "in":
            arcs.append((w, y))
    big = OrientedGraph.from_arcs(g.n + 1, arcs)
    h = merge(big, x, y)
    h.check_invariants()
    assert h.n == g.n
    common = bin(big.neighbors(x) & big.neighbors(y)).count("1")
    assert h.num_arcs == big.num_arcs - common


@given(oriented_graphs(min_n=1), st.data())
def test_delete_keeps_invariants(g, data):
    v = data.draw(st.integers(0, g.n - 1))
    h = delete_vertex(g, v)
    h.check_invariants()
    assert h.num_arcs == g.num_arcs - g.degree(v)


@settings(max_examples=300)
@given(oriented_graphs(min_n=2, max_n=10), st.data())
def test_source_deletion_keeps_clique(g, data):
    x = data.draw(st.integers(0, g.n - 1))
    g = push_all(g, [w for w in range(g.n) if g.has_arc(w, x)]) if g.in_degree(x) else g
    assume(is_source(g, x) and is_absolute_clique(g))
    assert is_absolute_clique(delete_vertex(g, x))


def test_push_keeps_pairs_away_from_pushed_vertex():
    for n in range(1, 65):
        g = build_O(n)
        for v in range(n):
            assert all(v in pair for pair in unseen_pairs(push(g, v)))


@settings(max_examples=200, deadline=None)
@given(oriented_graphs(min_n=2, max_n=9), st.data())
def test_shrink_contract_on_random_cliques(g, data):
    assume(is_absolute_clique(g) and g.num_arcs > 0)
    w = data.draw(st.integers(0, g.n - 1))
    step = shrink_step(g, w)
    step.graph.check_invariants()
    assert step.graph.n == g.n - 1
    assert step.graph.num_arcs < g.num_arcs
    assert is_absolute_clique(step.graph)


def test_empty_graph_is_valid():
    OrientedGraph.empty(0).check_invariants()
