from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hzcolor.graph import (
    Graph,
    GraphError,
    complete_graph,
    cycle_graph,
    is_overfull,
    k5_minus_e,
    path_graph,
    petersen_graph,
    petersen_minus_vertex,
)
from hzcolor.oracle import (
    BudgetExhausted,
    OracleBudget,
    PreconditionError,
    check_hz_lemma,
    check_val,
    chromatic_index,
    critical_subgraph,
    find_edge_coloring,
    is_critical,
    search_order,
    vizing_color,
)


def brute_colorable(g: Graph, k: int) -> bool:
    edges = g.edges()
    for cols in itertools.product(range(k), repeat=len(edges)):
        ok = True
        for v in g.vertices():
            seen = [c for e, c in zip(edges, cols) if v in e]
            if len(seen) != len(set(seen)):
                ok = False
                break
        if ok:
            return True
    return False


def brute_index(g: Graph) -> int:
    k = g.max_degree()
    while not brute_colorable(g, k):
        k += 1
    return k


@st.composite
def small_graphs(draw, max_n: int = 6, max_m: int = 8):
    n = draw(st.integers(2, max_n))
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), min_size=1, max_size=max_m, unique=True))
    return Graph.from_edges(n, chosen)


def triangle_with_pendant() -> Graph:
    return Graph.from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)])


def test_find_edge_coloring_examples():
    c = find_edge_coloring(complete_graph(4), 3)
    assert c is not None and c.is_total() and c.is_proper()
    assert find_edge_coloring(k5_minus_e(), 4) is None
    one = find_edge_coloring(path_graph(2), 1)
    assert one is not None and one.is_total()
    assert find_edge_coloring(complete_graph(4), 2) is None


@pytest.mark.parametrize(
    "g, value",
    [(cycle_graph(5), 3), (petersen_minus_vertex(), 4), (k5_minus_e(), 5), (complete_graph(4), 3), (petersen_graph(), 4)],
)
def test_chromatic_index_examples(g, value):
    res = chromatic_index(g)
    assert res.value == value
    assert res.witness is not None and res.witness.is_total() and res.witness.is_proper()
    assert len(res.witness.colors_used()) == value


@settings(max_examples=120, deadline=None)
@given(small_graphs())
def test_chromatic_index_matches_brute_force(g):
    assert chromatic_index(g).value == brute_index(g)


def test_chromatic_index_rejects_edgeless():
    with pytest.raises(GraphError):
        chromatic_index(Graph.from_edges(3, []))


def test_find_edge_coloring_is_deterministic():
    g = petersen_graph()
    assert find_edge_coloring(g, 4).to_json() == find_edge_coloring(g, 4).to_json()


def test_search_order_is_degree_then_lexicographic():
    g = triangle_with_pendant()
    order = search_order(g)
    keys = [(-(g.degree(e.u) + g.degree(e.v)), e) for e in order]
    assert keys == sorted(keys)


def test_budget_exhaustion_is_distinct():
    with pytest.raises(BudgetExhausted):
        find_edge_coloring(petersen_graph(), 3, OracleBudget(node_limit=5))
    res = chromatic_index(petersen_graph(), OracleBudget(node_limit=5), raise_on_budget=False)
    assert res.exhausted and res.value is None


def test_budget_must_be_positive():
    with pytest.raises(ValueError):
        OracleBudget(node_limit=0)


@pytest.mark.parametrize("g", [path_graph(2), complete_graph(4), petersen_graph(), k5_minus_e(), cycle_graph(7)])
def test_vizing_uses_at_most_delta_plus_one(g):
    c = vizing_color(g)
    assert c.is_total() and c.is_proper()
    assert len(c.colors_used()) <= g.max_degree() + 1


def test_vizing_single_edge():
    assert vizing_color(path_graph(2)).colors_used() == {0}


@settings(max_examples=80, deadline=None)
@given(small_graphs(max_n=9, max_m=20))
def test_vizing_property(g):
    c = vizing_color(g)
    assert c.is_total() and c.is_proper()


def test_critical_subgraph_examples():
    assert critical_subgraph(k5_minus_e()) == k5_minus_e()
    assert critical_subgraph(cycle_graph(3)) == cycle_graph(3)
    assert chromatic_index(triangle_with_pendant()).value == 3
    with pytest.raises(PreconditionError):
        critical_subgraph(triangle_with_pendant())
    # a triangle plus a separate edge keeps Δ = 2; the edge is not needed
    h = critical_subgraph(Graph.from_edges(5, [(0, 1), (1, 2), (0, 2), (3, 4)]))
    assert h.n == 5 and set(h.edges()) == set(cycle_graph(3).edges())
    with pytest.raises(PreconditionError):
        critical_subgraph(cycle_graph(4))


def test_k5_minus_e_is_critical_edge_by_edge():
    g = k5_minus_e()
    assert is_critical(g)
    for e in g.edges():
        assert brute_colorable(g.without_edge(*e), 4)


@pytest.mark.parametrize("g", [k5_minus_e(), cycle_graph(3), cycle_graph(7)])
def test_val_examples(g):
    assert check_val(g)


def test_val_fails_on_non_critical_shape():
    # a class 1 graph where a 1-vertex neighbor lacks Δ-neighbors
    assert not check_val(path_graph(4))


def test_hz_lemma_examples():
    assert check_hz_lemma(k5_minus_e(), 4)
    assert check_hz_lemma(petersen_minus_vertex(), 3)
    with pytest.raises(PreconditionError):
        check_hz_lemma(Graph.from_edges(5, [(0, i) for i in range(1, 5)]), 4)
    with pytest.raises(PreconditionError):
        check_hz_lemma(complete_graph(5), 4)


def test_overfull_examples_are_class2():
    for g in (k5_minus_e(), cycle_graph(3), cycle_graph(5), complete_graph(5)):
        assert is_overfull(g)
        assert chromatic_index(g).value == g.max_degree() + 1
