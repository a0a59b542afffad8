"""Breadth-first search over Kempe swaps, independent of the case trees."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Callable, Iterable

from ..coloring import EdgeColoring, KempeChain, kempe_chain
from ..graph import Edge, Graph

DEFAULT_STATES = 200_000


class SearchExhausted(RuntimeError):
    """The state budget ran out before a finishing coloring was found."""


@dataclass
class SearchResult:
    coloring: EdgeColoring
    path: list[KempeChain]
    states: int

    @property
    def swaps(self) -> int:
        return len(self.path)


def _flip(c: EdgeColoring, ch: KempeChain) -> EdgeColoring:
    out = c.copy()
    i, j = ch.colors
    olds = [out.color(*e) for e in ch.edges]
    for e in ch.edges:
        out.unassign(*e)
    for e, o in zip(ch.edges, olds):
        out.assign(e.u, e.v, j if o == i else i)
    return out


def chains_through(c: EdgeColoring, vertices: Iterable[int]) -> list[KempeChain]:
    """Distinct non-trivial Kempe chains meeting ``vertices``."""
    out: list[KempeChain] = []
    seen: set[frozenset] = set()
    for v in sorted(set(vertices)):
        for i in range(c.k):
            for j in range(i + 1, c.k):
                ch = kempe_chain(c, v, i, j)
                key = frozenset(ch.edges)
                if ch.edges and key not in seen:
                    seen.add(key)
                    out.append(ch)
    return out


def kempe_bfs(
    c: EdgeColoring,
    vertices: Iterable[int],
    goal: Callable[[EdgeColoring], bool],
    *,
    max_states: int = DEFAULT_STATES,
    max_depth: int | None = None,
) -> SearchResult | None:
    """Shortest sequence of swaps (of chains meeting ``vertices``) reaching a
    coloring that satisfies ``goal``.

    Returns None when the reachable space within ``max_depth`` is exhausted;
    raises :class:`SearchExhausted` when ``max_states`` is hit first.
    """
    verts = tuple(sorted(set(vertices)))
    if goal(c):
        return SearchResult(c.copy(), [], 1)
    seen = {frozenset(c.items())}
    queue: deque[tuple[EdgeColoring, tuple[KempeChain, ...]]] = deque([(c, ())])
    while queue:
        cur, path = queue.popleft()
        if max_depth is not None and len(path) >= max_depth:
            continue
        for ch in chains_through(cur, verts):
            nxt = _flip(cur, ch)
            key = frozenset(nxt.items())
            if key in seen:
                continue
            seen.add(key)
            if goal(nxt):
                return SearchResult(nxt, [*path, ch], len(seen))
            if len(seen) >= max_states:
                raise SearchExhausted(f"no extension within {max_states} states")
            queue.append((nxt, (*path, ch)))
    return None


def kempe_search_extend(
    g: Graph,
    e: tuple[int, int],
    c: EdgeColoring,
    *,
    vertices: Iterable[int] | None = None,
    max_states: int = DEFAULT_STATES,
) -> EdgeColoring:
    """Color ``e`` after Kempe swaps of chains through ``vertices`` (default:
    the endpoints of ``e`` and their neighbors), found by breadth-first search.

    Stops at the first coloring whose endpoints of ``e`` share a missing color.
    Raises :class:`SearchExhausted` when the budget runs out or the space is
    exhausted.
    """
    edge = Edge.of(*e)
    if c.graph != g:
        raise ValueError("coloring is for a different graph")
    if not g.has_edge(*edge):
        raise ValueError(f"{edge.key()} is not an edge")
    if c.color(*edge) is not None or set(c.uncolored_edges()) != {edge}:
        raise ValueError("coloring must be total on G - e with e uncolored")
    if not c.is_proper():
        raise ValueError("coloring is not proper")
    if vertices is None:
        vertices = {edge.u, edge.v, *g.neighbors(edge.u), *g.neighbors(edge.v)}

    def shared(x: EdgeColoring) -> bool:
        return bool(x.missing_colors(edge.u) & x.missing_colors(edge.v))

    res = kempe_bfs(c, vertices, shared, max_states=max_states)
    if res is None:
        raise SearchExhausted("every reachable coloring keeps the endpoints apart")
    out = res.coloring
    out.assign(edge.u, edge.v, min(out.missing_colors(edge.u) & out.missing_colors(edge.v)))
    return out
