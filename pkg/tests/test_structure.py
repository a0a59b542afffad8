from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import corpus
from hzcolor.generate import random_h4
from hzcolor.graph import Graph, complete_graph, core, cycle_graph, k5_minus_e, parse_graph6
from hzcolor.structure import (
    PATTERNS,
    ConfigMatch,
    StructureError,
    enumerate_configurations,
    find_configuration,
    in_G_k,
    in_H_k,
)


def star(k: int) -> Graph:
    return Graph.from_edges(k + 1, [(0, i) for i in range(1, k + 1)])


@pytest.mark.parametrize("g, expected", [(k5_minus_e(), True), (complete_graph(5), False), (star(4), True)])
def test_in_G_4(g, expected):
    assert in_G_k(g, 4) is expected


@pytest.mark.parametrize(
    "g, k, expected",
    [(k5_minus_e(), 4, True), (star(4), 4, False), (cycle_graph(6), 2, False)],
)
def test_in_H_k(g, k, expected):
    assert in_H_k(g, k) is expected


def test_configuration_search_examples():
    assert enumerate_configurations(k5_minus_e()) == []
    assert enumerate_configurations(Graph.from_edges(4, [])) == []
    with pytest.raises(StructureError):
        find_configuration(k5_minus_e())
    with pytest.raises(StructureError):
        find_configuration(complete_graph(5))


def test_smallest_host_with_each_kind():
    """Scan the exhaustive corpus for the smallest H_4 hosts of each kind."""
    smallest: dict[str, int] = {}
    for line in corpus("connected_maxdeg4_n1-10"):
        g = parse_graph6(line)
        if not in_H_k(g, 4):
            continue
        for m in enumerate_configurations(g):
            m.validate(g)
            smallest.setdefault(m.kind, g.n)
    assert set(smallest) == {"A", "B", "C"}
    assert smallest["A"] <= 7


def _two_c4_core(g: Graph) -> bool:
    h, _ = core(g)
    return h.m == 8 and h.n == 8 and all(h.degree(v) == 2 for v in h.vertices()) and not _has_triangle(h)


def _has_triangle(h: Graph) -> bool:
    return any(h.has_edge(a, b) for v in h.vertices() for a in h.neighbors(v) for b in h.neighbors(v) if a < b)


def test_two_square_core_without_chord_gives_kind_c():
    found = 0
    for seed in range(4000):
        g = random_h4(16, seed)
        if not _two_c4_core(g):
            continue
        v = next(x for x in g.vertices() if g.degree(x) == 4)
        threes = [w for w in g.neighbors(v) if g.degree(w) == 3]
        fours = [w for w in g.neighbors(v) if g.degree(w) == 4]
        if any(g.has_edge(a, b) for a in threes for b in fours):
            continue
        m = find_configuration(g)
        assert m in enumerate_configurations(g)
        if m.kind == "C":
            found += 1
        if found >= 3:
            break
    assert found >= 3


@settings(max_examples=60, deadline=None)
@given(st.integers(5, 30), st.integers(0, 2**32 - 1))
def test_found_configuration_is_enumerated(n, seed):
    try:
        g = random_h4(n, seed)
    except Exception:
        return
    if g.n == 5:
        assert enumerate_configurations(g) == []
        return
    m = find_configuration(g)
    m.validate(g)
    matches = enumerate_configurations(g)
    assert m in matches
    for other in matches:
        assert other.is_valid(g)


def test_match_validation():
    g = random_h4(12, 3)
    m = find_configuration(g)
    assert m.e == tuple(sorted((m[PATTERNS[m.kind].designated[0]], m[PATTERNS[m.kind].designated[1]])))
    roles = m.role_map()
    a, b = list(roles)[:2]
    bad = m.replace(**{a: roles[b], b: roles[a]})
    assert not bad.is_valid(g)
    with pytest.raises(StructureError):
        ConfigMatch.of("A", v=0, z=1)
    assert m.to_json()["kind"] == m.kind
