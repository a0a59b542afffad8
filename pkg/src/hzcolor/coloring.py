"""Partial proper edge-colorings and Kempe-chain operations on them."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .graph import Edge, Graph, GraphError


class ColoringError(ValueError):
    """Improper assignment, bad palette, or misuse of a chain."""


class StaleChainError(ColoringError):
    """A chain no longer matches the coloring it is applied to."""


class EdgeColoring:
    """Assignment of colors ``0..k-1`` to some edges of a fixed graph.

    Properness is enforced on every assignment. Methods ending in ``_inplace``
    (and :meth:`assign` / :meth:`unassign`) mutate; everything else returns a
    new coloring.
    """

    __slots__ = ("graph", "k", "_col", "_at")

    def __init__(self, graph: Graph, k: int = 4) -> None:
        if k < 1:
            raise ColoringError("need at least one color")
        self.graph = graph
        self.k = k
        self._col: dict[Edge, int] = {}
        # _at[v][c] is the neighbor joined to v by the edge colored c
        self._at: list[dict[int, int]] = [{} for _ in range(graph.n)]

    @classmethod
    def from_mapping(
        cls, graph: Graph, mapping: Mapping[tuple[int, int], int], k: int = 4
    ) -> "EdgeColoring":
        c = cls(graph, k)
        for (a, b), color in mapping.items():
            c.assign(a, b, color)
        return c

    def copy(self) -> "EdgeColoring":
        c = EdgeColoring.__new__(EdgeColoring)
        c.graph = self.graph
        c.k = self.k
        c._col = dict(self._col)
        c._at = [dict(d) for d in self._at]
        return c

    # -- queries -------------------------------------------------------

    def color(self, a: int, b: int) -> int | None:
        return self._col.get(Edge.of(a, b))

    def items(self) -> list[tuple[Edge, int]]:
        return sorted(self._col.items())

    def colored_edges(self) -> frozenset[Edge]:
        return frozenset(self._col)

    def uncolored_edges(self) -> list[Edge]:
        return [e for e in self.graph.edges() if e not in self._col]

    def __len__(self) -> int:
        return len(self._col)

    def sees(self, v: int, color: int) -> bool:
        return color in self._at[v]

    def seen_colors(self, v: int) -> frozenset[int]:
        return frozenset(self._at[v])

    def missing_colors(self, v: int) -> frozenset[int]:
        self.graph._check_vertex(v)
        return frozenset(c for c in range(self.k) if c not in self._at[v])

    def neighbor_via(self, v: int, color: int) -> int | None:
        """The neighbor reached from ``v`` along the edge colored ``color``."""
        return self._at[v].get(color)

    def colors_used(self) -> frozenset[int]:
        return frozenset(self._col.values())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EdgeColoring):
            return NotImplemented
        return self.graph == other.graph and self.k == other.k and self._col == other._col

    def __repr__(self) -> str:
        return f"EdgeColoring(k={self.k}, {self.to_json()})"

    # -- mutation ------------------------------------------------------

    def assign(self, a: int, b: int, color: int) -> None:
        if not self.graph.has_edge(a, b):
            raise GraphError(f"edge ({a}, {b}) not in graph")
        if not 0 <= color < self.k:
            raise ColoringError(f"color {color} outside palette 0..{self.k - 1}")
        e = Edge.of(a, b)
        old = self._col.get(e)
        if old == color:
            return
        for x, y in ((a, b), (b, a)):
            holder = self._at[x].get(color)
            if holder is not None and holder != y:
                raise ColoringError(f"color {color} already used at vertex {x}")
        if old is not None:
            del self._at[a][old]
            del self._at[b][old]
        self._col[e] = color
        self._at[a][color] = b
        self._at[b][color] = a

    def unassign(self, a: int, b: int) -> None:
        e = Edge.of(a, b)
        old = self._col.pop(e, None)
        if old is not None:
            del self._at[a][old]
            del self._at[b][old]

    # -- whole-coloring checks -----------------------------------------

    def is_proper(self) -> bool:
        seen: list[set[int]] = [set() for _ in range(self.graph.n)]
        for (a, b), c in self._col.items():
            if not self.graph.has_edge(a, b) or not 0 <= c < self.k:
                return False
            if c in seen[a] or c in seen[b]:
                return False
            seen[a].add(c)
            seen[b].add(c)
        return True

    def is_total(self) -> bool:
        return len(self._col) == self.graph.m

    def to_json(self) -> dict[str, int]:
        return {e.key(): c for e, c in self.items()}

    @classmethod
    def from_json(cls, graph: Graph, data: Mapping[str, int], k: int = 4) -> "EdgeColoring":
        mapping = {}
        for key, color in data.items():
            a, b = (int(p) for p in key.split("-"))
            mapping[(a, b)] = int(color)
        return cls.from_mapping(graph, mapping, k)


def missing_colors(c: EdgeColoring, v: int) -> frozenset[int]:
    return c.missing_colors(v)


def is_proper(c: EdgeColoring) -> bool:
    return c.is_proper()


def is_total(c: EdgeColoring) -> bool:
    return c.is_total()


# -- Kempe chains ------------------------------------------------------

PATH = "path"
CYCLE = "cycle"


@dataclass(frozen=True)
class KempeChain:
    """Snapshot of one (i, j)-component: an alternating path or even cycle.

    For a path, ``vertices`` runs from one end to the other and has one more
    entry than ``edges``. For a cycle, the first vertex is repeated at the end.
    ``edge_colors`` records the colors at extraction time (staleness check).
    """

    colors: tuple[int, int]
    vertices: tuple[int, ...]
    edges: tuple[Edge, ...]
    edge_colors: tuple[int, ...]
    shape: str

    @property
    def is_cycle(self) -> bool:
        return self.shape == CYCLE

    def ends(self) -> tuple[int, int]:
        if self.is_cycle:
            raise ColoringError("a cycle has no ends")
        return self.vertices[0], self.vertices[-1]

    def far_end(self, start: int) -> int | None:
        """The other end of a path chain starting at ``start``; None for cycles."""
        if self.is_cycle:
            return None
        a, b = self.ends()
        if start == a:
            return b
        if start == b:
            return a
        raise ColoringError(f"{start} is not an end of this chain")

    def __contains__(self, v: object) -> bool:
        return v in self.vertices


def _walk(
    c: EdgeColoring, start: int, first: int, other: int, skip: frozenset[Edge]
) -> tuple[list[int], list[Edge], list[int]]:
    """Follow alternating colors from ``start`` beginning with color ``first``."""
    verts = [start]
    edges: list[Edge] = []
    cols: list[int] = []
    x, color = start, first
    while True:
        y = c.neighbor_via(x, color)
        if y is None:
            break
        e = Edge.of(x, y)
        if e in skip:
            break
        edges.append(e)
        cols.append(color)
        verts.append(y)
        if y == start:
            break
        x, color = y, (other if color == first else first)
    return verts, edges, cols


def kempe_chain(
    c: EdgeColoring,
    v: int,
    i: int,
    j: int,
    excluded: Iterable[Edge] = (),
) -> KempeChain:
    """The (i, j)-component containing ``v``.

    Edges in ``excluded`` are treated as absent, which gives chains in
    ``G - E(H)`` for a configuration ``H``.
    """
    if i == j or not (0 <= i < c.k and 0 <= j < c.k):
        raise ColoringError(f"bad color pair ({i}, {j}) for k={c.k}")
    c.graph._check_vertex(v)
    skip = frozenset(excluded)
    has_i = c.sees(v, i) and Edge.of(v, c.neighbor_via(v, i)) not in skip  # type: ignore[arg-type]
    has_j = c.sees(v, j) and Edge.of(v, c.neighbor_via(v, j)) not in skip  # type: ignore[arg-type]
    pair = (min(i, j), max(i, j))
    if not has_i and not has_j:
        return KempeChain(pair, (v,), (), (), PATH)
    if has_i and has_j:
        verts, edges, cols = _walk(c, v, i, j, skip)
        if verts[-1] == v and len(edges) > 0:
            if len(edges) % 2:
                raise ColoringError("odd alternating cycle: coloring is improper")
            return KempeChain(pair, tuple(verts), tuple(edges), tuple(cols), CYCLE)
        back_v, back_e, back_c = _walk(c, v, j, i, skip)
        verts = back_v[::-1] + verts[1:]
        edges = back_e[::-1] + edges
        cols = back_c[::-1] + cols
        return KempeChain(pair, tuple(verts), tuple(edges), tuple(cols), PATH)
    first = i if has_i else j
    other = j if has_i else i
    verts, edges, cols = _walk(c, v, first, other, skip)
    return KempeChain(pair, tuple(verts), tuple(edges), tuple(cols), PATH)


@dataclass(frozen=True)
class ChainEnd:
    """One end of a path chain relative to a tracked vertex set.

    ``at_infinity`` means the end vertex lies outside the tracked set.
    """

    vertex: int
    at_infinity: bool


def chain_ends(
    chain: KempeChain, tracked: Iterable[int]
) -> tuple[ChainEnd, ChainEnd] | str:
    """Both end descriptors of a path chain, or :data:`CYCLE`."""
    if chain.is_cycle:
        return CYCLE
    s = set(tracked)
    a, b = chain.ends()
    return ChainEnd(a, a not in s), ChainEnd(b, b not in s)


def linked(c: EdgeColoring, v: int, w: int, i: int, j: int) -> bool:
    if v == w:
        raise ColoringError("linked() needs two distinct vertices")
    return w in kempe_chain(c, v, i, j)


def _check_fresh(c: EdgeColoring, chain: KempeChain) -> None:
    i, j = chain.colors
    for e, col in zip(chain.edges, chain.edge_colors):
        if c.color(*e) != col:
            raise StaleChainError(f"edge {e} changed color since extraction")
    if chain.edges:
        for k, (e, col) in enumerate(zip(chain.edges, chain.edge_colors)):
            if col not in (i, j):
                raise StaleChainError(f"edge {e} is not colored {i} or {j}")
            if k and col == chain.edge_colors[k - 1]:
                raise StaleChainError("chain colors do not alternate")


def swap_inplace(c: EdgeColoring, chain: KempeChain) -> None:
    """Interchange the two colors along ``chain`` (mutates ``c``)."""
    _check_fresh(c, chain)
    i, j = chain.colors
    for e in chain.edges:
        c.unassign(*e)
    for e, col in zip(chain.edges, chain.edge_colors):
        c.assign(e.u, e.v, j if col == i else i)


def swap(c: EdgeColoring, chain: KempeChain) -> EdgeColoring:
    out = c.copy()
    swap_inplace(out, chain)
    return out


def kempe_swap(c: EdgeColoring, v: int, i: int, j: int) -> EdgeColoring:
    """Recolor the (i, j)-chain at ``v``; convenience wrapper."""
    return swap(c, kempe_chain(c, v, i, j))


def apply_color_permutation(c: EdgeColoring, perm: Sequence[int]) -> EdgeColoring:
    """Replace every color ``x`` by ``perm[x]``."""
    if sorted(perm) != list(range(c.k)):
        raise ColoringError(f"{list(perm)} is not a permutation of 0..{c.k - 1}")
    out = EdgeColoring(c.graph, c.k)
    for e, col in c.items():
        out.assign(e.u, e.v, perm[col])
    return out


def invert_permutation(perm: Sequence[int]) -> list[int]:
    inv = [0] * len(perm)
    for x, y in enumerate(perm):
        inv[y] = x
    return inv
