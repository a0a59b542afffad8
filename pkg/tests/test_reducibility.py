from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hzcolor.coloring import EdgeColoring, apply_color_permutation
from hzcolor.generate import random_h4
from hzcolor.graph import Graph
from hzcolor.harness import RunConfig, color_minus_e
from hzcolor.reducibility import (
    Assign,
    ExtendA,
    Permute,
    SearchExhausted,
    Swap,
    SwapBudgetExceeded,
    extend,
    extend_a,
    extend_b,
    extend_c,
    kempe_bfs,
    kempe_search_extend,
    normalize,
    normalize_for,
    replay,
)
from hzcolor.structure import enumerate_configurations, find_configuration
from hzcolor.suites import is_hard, stress_instance

# -- normalization -------------------------------------------------------------


def _endpoint_graph() -> Graph:
    # big = 0 (degree 4), small = 1 (degree 3), e = 0-1
    return Graph.from_edges(7, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 5), (1, 6)])


def test_normalize_identity_when_already_normalized():
    c = EdgeColoring.from_mapping(_endpoint_graph(), {(0, 2): 0, (0, 3): 2, (0, 4): 3, (1, 5): 0, (1, 6): 1})
    out = normalize(c, 1, 0)
    assert out is not None
    assert out[1] == (0, 1, 2, 3) and out[0] == c


def test_normalize_permutes_into_convention():
    # small sees {2, 3}; big sees {0, 1, 3} and misses 2
    c = EdgeColoring.from_mapping(_endpoint_graph(), {(0, 2): 0, (0, 3): 1, (0, 4): 3, (1, 5): 2, (1, 6): 3})
    out, perm = normalize(c, 1, 0)
    assert out == apply_color_permutation(c, perm)
    assert out.seen_colors(1) == {0, 1}
    assert out.missing_colors(0) == {1}


def test_normalize_shared_missing_color_returns_none():
    # small sees {2, 3}, big sees {1, 2, 3}: both miss 0
    c = EdgeColoring.from_mapping(_endpoint_graph(), {(0, 2): 1, (0, 3): 2, (0, 4): 3, (1, 5): 2, (1, 6): 3})
    assert normalize(c, 1, 0) is None


def test_shared_missing_color_is_assigned_directly():
    g = random_h4(12, 5)
    m = find_configuration(g)
    for seed in range(50):
        c = color_minus_e(g, m.e, RunConfig(seed=seed))
        if normalize_for(c, m) is None:
            tr = extend(g, m, c)
            assert tr.swaps == 0
            assert any(isinstance(s.action, Assign) and s.action.edge == m.e for s in tr.steps)
            return
    pytest.fail("no coloring with a shared missing color found")


@settings(max_examples=40, deadline=None)
@given(st.sampled_from("ABC"), st.integers(0, 10**6))
def test_normalize_postcondition(kind, seed):
    inst = stress_instance(kind, seed)
    res = normalize_for(inst.coloring, inst.match)
    if res is None:
        return
    out, perm = res
    g, e = inst.graph, inst.match.e
    small = e.u if g.degree(e.u) == 3 else e.v
    assert out.seen_colors(small) == {0, 1}
    assert out.missing_colors(e.other(small)) == {1}
    assert sorted(perm) == [0, 1, 2, 3]


def test_normalize_rejects_bad_input():
    inst = stress_instance("A", 1)
    colored = inst.coloring.copy()
    colored.unassign(*next(f for f, _ in colored.items()))
    with pytest.raises(ValueError):
        normalize_for(colored, inst.match)


# -- extension ------------------------------------------------------------------


@settings(max_examples=60, deadline=None)
@given(st.sampled_from("ABC"), st.integers(0, 10**6))
def test_extension_is_sound_and_replayable(kind, seed):
    inst = stress_instance(kind, seed)
    tr = extend(inst.graph, inst.match, inst.coloring)
    assert tr.final is not None and tr.final.is_total() and tr.final.is_proper()
    assert tr.final.graph == inst.graph
    assert replay(tr.initial, tr.steps) == tr.final
    assert tr.initial == inst.coloring
    assert tr.swaps <= 64
    for s in tr.steps:
        assert isinstance(s.action, (Swap, Assign, Permute))
        assert s.label


def test_extension_is_deterministic():
    inst = stress_instance("C", 43)
    a = extend(inst.graph, inst.match, inst.coloring)
    b = extend(inst.graph, inst.match, inst.coloring)
    assert a.to_json() == b.to_json() and a.final == b.final


def test_kind_specific_entry_points_check_kind():
    inst = stress_instance("B", 0)
    assert extend_b(inst.graph, inst.match, inst.coloring).final.is_total()
    with pytest.raises(ValueError):
        extend_a(inst.graph, inst.match, inst.coloring)
    with pytest.raises(ValueError):
        extend_c(inst.graph, inst.match, inst.coloring)
    with pytest.raises(ValueError):
        ExtendA(inst.graph, inst.match, inst.coloring)


def test_extension_rejects_colored_designated_edge():
    inst = stress_instance("A", 0)
    tr = extend(inst.graph, inst.match, inst.coloring)
    with pytest.raises(ValueError):
        extend(inst.graph, inst.match, tr.final)


def test_zero_budget_on_a_hard_instance():
    for seed in range(200):
        inst = stress_instance("B", seed)
        if is_hard(inst.coloring, inst.match.e):
            with pytest.raises(SwapBudgetExceeded):
                extend(inst.graph, inst.match, inst.coloring, budget=0)
            return
    pytest.fail("no hard instance among the seeds tried")


def test_kind_c_can_hand_over_to_kind_a():
    inst = stress_instance("C", 43)
    tr = extend(inst.graph, inst.match, inst.coloring)
    assert any(lbl.startswith("C>A") for lbl in tr.labels())
    assert tr.final.is_total() and tr.final.is_proper()


def test_escape_search_is_labelled():
    inst = stress_instance("A", 68)
    tr = extend(inst.graph, inst.match, inst.coloring)
    assert any(lbl.endswith(".escape") for lbl in tr.labels())
    assert replay(tr.initial, tr.steps) == tr.final


def test_trace_json_shape():
    inst = stress_instance("A", 3)
    js = extend(inst.graph, inst.match, inst.coloring).to_json()
    assert js["config"]["kind"] == "A"
    for step in js["steps"]:
        assert step["action"] in {"swap", "assign", "permute"} and "label" in step


# -- breadth-first oracle ----------------------------------------------------------


def test_search_oracle_zero_swaps_when_already_finishable():
    g = random_h4(12, 5)
    m = find_configuration(g)
    for seed in range(50):
        c = color_minus_e(g, m.e, RunConfig(seed=seed))
        if c.missing_colors(m.e.u) & c.missing_colors(m.e.v):
            res = kempe_bfs(c, m.vertices(), lambda x: bool(x.missing_colors(m.e.u) & x.missing_colors(m.e.v)))
            assert res is not None and res.swaps == 0
            out = kempe_search_extend(g, m.e, c)
            assert out.is_total() and out.is_proper()
            return
    pytest.fail("no finishable coloring found")


@settings(max_examples=40, deadline=None)
@given(st.sampled_from("ABC"), st.integers(0, 10**6))
def test_search_oracle_agrees_with_case_tree(kind, seed):
    inst = stress_instance(kind, seed)
    extend(inst.graph, inst.match, inst.coloring)
    out = kempe_search_extend(inst.graph, inst.match.e, inst.coloring, vertices=inst.match.vertices())
    assert out.is_total() and out.is_proper()


def test_search_oracle_rejects_bad_input():
    inst = stress_instance("A", 0)
    g = inst.graph
    with pytest.raises(ValueError):
        kempe_search_extend(g, inst.match.e, EdgeColoring(g))
    other = next(f for f in g.edges() if f != inst.match.e)
    with pytest.raises(ValueError):
        kempe_search_extend(g, other, inst.coloring)


def test_search_oracle_budget():
    for seed in range(200):
        inst = stress_instance("C", seed)
        if is_hard(inst.coloring, inst.match.e):
            with pytest.raises(SearchExhausted):
                kempe_search_extend(inst.graph, inst.match.e, inst.coloring, max_states=1)
            return
    pytest.fail("no hard instance among the seeds tried")


def test_every_enumerated_match_extends():
    g = random_h4(14, 11)
    for m in enumerate_configurations(g)[:40]:
        c = color_minus_e(g, m.e, RunConfig(seed=1))
        tr = extend(g, m, c)
        assert tr.final.is_total() and tr.final.is_proper()
