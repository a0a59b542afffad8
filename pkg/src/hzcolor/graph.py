"""Simple undirected graphs over dense integer ids, plus graph6 / edge-list I/O."""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator, NamedTuple, Sequence

GRAPH6_HEADER = ">>graph6<<"


class GraphError(ValueError):
    """Invalid graph data or an operation undefined on the given graph."""


class Graph6Error(GraphError):
    def __init__(self, message: str, offset: int) -> None:
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class Edge(NamedTuple):
    """Canonically oriented edge, ``u < v``."""

    u: int
    v: int

    @classmethod
    def of(cls, a: int, b: int) -> "Edge":
        if a == b:
            raise GraphError(f"self-loop at vertex {a}")
        return cls(a, b) if a < b else cls(b, a)

    def other(self, x: int) -> int:
        if x == self.u:
            return self.v
        if x == self.v:
            return self.u
        raise GraphError(f"vertex {x} is not an endpoint of {self}")

    def key(self) -> str:
        return f"{self.u}-{self.v}"


class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    Build one with :meth:`from_edges` (or the graph6 / edge-list parsers);
    "mutations" such as :meth:`without_edge` return new graphs.
    """

    __slots__ = ("n", "_adj", "_nbrs", "m", "_edges")

    def __init__(self, n: int, adjacency: Sequence[Iterable[int]]) -> None:
        if n < 0:
            raise GraphError("negative vertex count")
        if len(adjacency) != n:
            raise GraphError("adjacency length does not match n")
        adj = tuple(frozenset(a) for a in adjacency)
        total = 0
        for v, nb in enumerate(adj):
            for w in nb:
                if not 0 <= w < n:
                    raise GraphError(f"neighbor {w} of {v} out of range")
                if w == v:
                    raise GraphError(f"self-loop at vertex {v}")
                if v not in adj[w]:
                    raise GraphError(f"asymmetric adjacency between {v} and {w}")
            total += len(nb)
        self.n = n
        self._adj = adj
        self._nbrs = tuple(tuple(sorted(a)) for a in adj)
        self.m = total // 2
        self._edges: tuple[Edge, ...] | None = None

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj: list[set[int]] = [set() for _ in range(n)]
        for a, b in edges:
            if not (0 <= a < n and 0 <= b < n):
                raise GraphError(f"edge ({a}, {b}) out of range for n={n}")
            if a == b:
                raise GraphError(f"self-loop at vertex {a}")
            if b in adj[a]:
                raise GraphError(f"parallel edge ({a}, {b})")
            adj[a].add(b)
            adj[b].add(a)
        return cls(n, adj)

    # -- basic queries -------------------------------------------------

    def neighbors(self, v: int) -> tuple[int, ...]:
        """Sorted neighbors of ``v``."""
        self._check_vertex(v)
        return self._nbrs[v]

    def has_edge(self, a: int, b: int) -> bool:
        return 0 <= a < self.n and b in self._adj[a]

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self._nbrs[v])

    def degrees(self) -> list[int]:
        return [len(nb) for nb in self._nbrs]

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def edges(self) -> tuple[Edge, ...]:
        """All edges in lexicographic order."""
        if self._edges is None:
            self._edges = tuple(
                Edge(u, v) for u in range(self.n) for v in self._nbrs[u] if u < v
            )
        return self._edges

    def vertices(self) -> range:
        return range(self.n)

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range for n={self.n}")

    # -- derived graphs ------------------------------------------------

    def without_edge(self, a: int, b: int) -> "Graph":
        if not self.has_edge(a, b):
            raise GraphError(f"edge ({a}, {b}) not in graph")
        adj = [set(nb) for nb in self._adj]
        adj[a].discard(b)
        adj[b].discard(a)
        return Graph(self.n, adj)

    def with_edge(self, a: int, b: int) -> "Graph":
        if a == b:
            raise GraphError(f"self-loop at vertex {a}")
        if self.has_edge(a, b):
            raise GraphError(f"parallel edge ({a}, {b})")
        adj = [set(nb) for nb in self._adj]
        adj[a].add(b)
        adj[b].add(a)
        return Graph(self.n, adj)

    def edge_subgraph(self, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Spanning subgraph with the given edges (all must exist)."""
        es = list(edges)
        for a, b in es:
            if not self.has_edge(a, b):
                raise GraphError(f"edge ({a}, {b}) not in graph")
        return Graph.from_edges(self.n, es)

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph relabelled to ``0..k-1``; second item maps new ids back."""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        adj = [[index[w] for w in self._nbrs[v] if w in index] for v in keep]
        return Graph(len(keep), adj), keep

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m}, graph6={emit_graph6(self)!r})"


# -- structural predicates ---------------------------------------------


def _require_edges(g: Graph) -> int:
    if g.m == 0:
        raise GraphError("graph has no edges")
    return g.max_degree()


def core(g: Graph) -> tuple[Graph, list[int]]:
    """Subgraph induced by the maximum-degree vertices, with the id map back to ``g``."""
    delta = _require_edges(g)
    return g.induced_subgraph(v for v in g.vertices() if g.degree(v) == delta)


def core_max_degree(g: Graph) -> int:
    c, _ = core(g)
    return c.max_degree()


def is_overfull(g: Graph) -> bool:
    delta = _require_edges(g)
    return g.m > delta * (g.n // 2)


def connected_components(g: Graph) -> list[list[int]]:
    """Vertex sets of the components, each sorted, ordered by smallest vertex."""
    seen = [False] * g.n
    parts: list[list[int]] = []
    for s in g.vertices():
        if seen[s]:
            continue
        seen[s] = True
        part = [s]
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in g.neighbors(x):
                if not seen[y]:
                    seen[y] = True
                    part.append(y)
                    queue.append(y)
        parts.append(sorted(part))
    return parts


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) == 1


def is_k5_minus_e(g: Graph) -> bool:
    if g.n != 5 or g.m != 9:
        return False
    small = [v for v in g.vertices() if g.degree(v) == 3]
    return sorted(g.degrees()) == [3, 3, 4, 4, 4] and not g.has_edge(*small)


# -- named graphs used throughout tests and fixtures -------------------


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, j) for i in range(n) for j in range(i + 1, n)))


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def k5_minus_e() -> Graph:
    return complete_graph(5).without_edge(3, 4)


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def petersen_minus_vertex() -> Graph:
    """P*: the Petersen graph with one vertex deleted."""
    g, _ = petersen_graph().induced_subgraph(range(1, 10))
    return g


# -- graph6 ------------------------------------------------------------


def _encode_n(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise GraphError("graph too large for graph6")


def emit_graph6(g: Graph) -> str:
    """Canonical graph6 text (no header, zero padding)."""
    out = [_encode_n(g.n)]
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        for i in range(j):
            acc = (acc << 1) | (1 if g.has_edge(i, j) else 0)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    base = 0
    if s.startswith(GRAPH6_HEADER):
        base = len(GRAPH6_HEADER)
        s = s[base:]
    if not s:
        raise Graph6Error("empty graph6 string", base)
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"non-graph6 character {ch!r}", base + i)
    vals = [ord(ch) - 63 for ch in s]
    if vals[0] < 63:
        n, pos = vals[0], 1
    elif len(vals) >= 2 and vals[1] < 63:
        if len(vals) < 4:
            raise Graph6Error("truncated length field", base + len(vals))
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        pos = 4
        if n < 63:
            raise Graph6Error("non-minimal length field", base)
    else:
        if len(vals) < 8:
            raise Graph6Error("truncated length field", base + len(vals))
        n = 0
        for x in vals[2:8]:
            n = (n << 6) | x
        pos = 8
        if n <= 258047:
            raise Graph6Error("non-minimal length field", base)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    have = len(vals) - pos
    if have < need:
        raise Graph6Error(f"payload too short: {have} bytes, need {need}", base + len(vals))
    if have > need:
        raise Graph6Error(f"payload too long: {have} bytes, need {need}", base + pos + need)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = vals[pos + k // 6]
            if (byte >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    if nbits % 6:
        pad = vals[-1] & ((1 << (6 - nbits % 6)) - 1)
        if pad:
            raise Graph6Error("nonzero padding bits", base + len(vals) - 1)
    return Graph.from_edges(n, edges)


# -- edge-list text ----------------------------------------------------


def parse_edgelist(text: str, n: int | None = None) -> Graph:
    """Parse ``"u v"`` lines (0-based). ``#`` starts a comment.

    A line holding a single integer declares the vertex count; otherwise the
    count is one more than the largest id seen (or ``n`` if given).
    """
    edges: list[tuple[int, int]] = []
    declared = n
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            nums = [int(p) for p in parts]
        except ValueError:
            raise GraphError(f"line {lineno}: expected integers, got {raw!r}") from None
        if len(nums) == 1 and not edges and declared is None:
            declared = nums[0]
            continue
        if len(nums) != 2 or min(nums) < 0:
            raise GraphError(f"line {lineno}: expected 'u v', got {raw!r}")
        edges.append((nums[0], nums[1]))
    top = max((max(e) for e in edges), default=-1) + 1
    count = declared if declared is not None else top
    if count < top:
        raise GraphError(f"vertex id {top - 1} exceeds declared count {count}")
    return Graph.from_edges(count, edges)


def emit_edgelist(g: Graph) -> str:
    lines = [str(g.n)] + [f"{e.u} {e.v}" for e in g.edges()]
    return "\n".join(lines) + "\n"


def read_graph6_lines(lines: Iterable[str]) -> Iterator[tuple[int, Graph | Graph6Error]]:
    """Yield ``(line_number, graph or error)`` for each non-blank line."""
    for lineno, line in enumerate(lines, 1):
        if not line.strip():
            continue
        try:
            yield lineno, parse_graph6(line)
        except Graph6Error as exc:
            yield lineno, exc
