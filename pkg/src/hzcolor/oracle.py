"""Ground-truth engines: exact edge-coloring search, Vizing's Δ+1 colorer,
critical-subgraph extraction, and checks of the adjacency lemmas."""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .coloring import EdgeColoring, kempe_chain, swap_inplace
from .graph import Edge, Graph, GraphError


class BudgetExhausted(RuntimeError):
    """Search stopped before deciding; the answer is unknown."""


class PreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class OracleBudget:
    node_limit: int = 10_000_000
    time_limit: float = 30.0

    def __post_init__(self) -> None:
        if self.node_limit <= 0 or self.time_limit <= 0:
            raise ValueError("budget limits must be positive")


DEFAULT_BUDGET = OracleBudget()


@dataclass
class ChromaticIndexResult:
    value: int | None
    witness: EdgeColoring | None
    exhausted: bool = False
    nodes: int = field(default=0, compare=False)


def search_order(g: Graph) -> list[Edge]:
    """Edges by descending endpoint-degree sum, then lexicographically."""
    return sorted(g.edges(), key=lambda e: (-(g.degree(e.u) + g.degree(e.v)), e))


class _Search:
    def __init__(self, g: Graph, k: int, budget: OracleBudget) -> None:
        self.g = g
        self.k = k
        self.budget = budget
        self.nodes = 0
        self.deadline = time.monotonic() + budget.time_limit
        self.full = (1 << k) - 1

    def run(self) -> dict[Edge, int] | None:
        g, k = self.g, self.k
        used = [0] * g.n
        fixed: dict[Edge, int] = {}
        if g.m:
            hub = min(range(g.n), key=lambda v: (-g.degree(v), v))
            for c, w in enumerate(g.neighbors(hub)):
                e = Edge.of(hub, w)
                fixed[e] = c
                used[hub] |= 1 << c
                used[w] |= 1 << c
        order = [e for e in search_order(g) if e not in fixed]
        # uncolored edge count per vertex, for forward checking
        open_at = [0] * g.n
        for e in order:
            open_at[e.u] += 1
            open_at[e.v] += 1
        assign: list[int] = [-1] * len(order)
        if self._dfs(order, 0, used, open_at, assign):
            out = dict(fixed)
            out.update(zip(order, assign))
            return out
        return None

    def _tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget.node_limit:
            raise BudgetExhausted(f"node limit {self.budget.node_limit} reached")
        if self.nodes & 1023 == 0 and time.monotonic() > self.deadline:
            raise BudgetExhausted(f"time limit {self.budget.time_limit}s reached")

    def _dfs(self, order, idx, used, open_at, assign) -> bool:
        if idx == len(order):
            return True
        self._tick()
        e = order[idx]
        a, b = e
        free = self.full & ~(used[a] | used[b])
        open_at[a] -= 1
        open_at[b] -= 1
        c = 0
        while free:
            if free & 1:
                bit = 1 << c
                used[a] |= bit
                used[b] |= bit
                # an endpoint whose remaining edges outnumber its free colors is dead
                if (
                    self.k - bin(used[a]).count("1") >= open_at[a]
                    and self.k - bin(used[b]).count("1") >= open_at[b]
                ):
                    assign[idx] = c
                    if self._dfs(order, idx + 1, used, open_at, assign):
                        return True
                used[a] &= ~bit
                used[b] &= ~bit
            free >>= 1
            c += 1
        open_at[a] += 1
        open_at[b] += 1
        return False


def find_edge_coloring(
    g: Graph, k: int, budget: OracleBudget = DEFAULT_BUDGET
) -> EdgeColoring | None:
    """A total proper ``k``-edge-coloring of ``g``, or None if none exists.

    Raises :class:`BudgetExhausted` when the search is cut off.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if k < g.max_degree():
        return None
    found = _Search(g, k, budget).run()
    if found is None:
        return None
    return EdgeColoring.from_mapping(g, found, k)


def vizing_color(g: Graph) -> EdgeColoring:
    """Misra-Gries fan recoloring: a proper coloring with at most Δ+1 colors."""
    k = g.max_degree() + 1
    c = EdgeColoring(g, k)
    for e in g.edges():
        _vizing_insert(c, e.u, e.v)
    return c


def _free(c: EdgeColoring, v: int) -> int:
    return min(c.missing_colors(v))


def _vizing_insert(c: EdgeColoring, u: int, v: int) -> None:
    g = c.graph
    fan = [v]
    in_fan = {v}
    while True:
        last = fan[-1]
        nxt = None
        for w in g.neighbors(u):
            if w in in_fan:
                continue
            col = c.color(u, w)
            if col is not None and not c.sees(last, col):
                nxt = w
                break
        if nxt is None:
            break
        fan.append(nxt)
        in_fan.add(nxt)
    a = _free(c, u)
    d = _free(c, fan[-1])
    if a != d and c.sees(u, d):
        swap_inplace(c, kempe_chain(c, u, a, d))
    # u now misses d; take the first vertex missing d within the surviving fan prefix
    idx = None
    for i, w in enumerate(fan):
        if i:
            col = c.color(u, w)
            if col is None or c.sees(fan[i - 1], col):
                break
        if not c.sees(w, d):
            idx = i
            break
    if idx is None:  # pragma: no cover - guaranteed by the fan lemma
        raise AssertionError("no fan vertex misses the path color")
    for i in range(idx):
        nxt_col = c.color(u, fan[i + 1])
        c.unassign(u, fan[i + 1])
        c.assign(u, fan[i], nxt_col)  # type: ignore[arg-type]
    c.assign(u, fan[idx], d)


def chromatic_index(
    g: Graph, budget: OracleBudget = DEFAULT_BUDGET, *, raise_on_budget: bool = True
) -> ChromaticIndexResult:
    if g.m == 0:
        raise GraphError("graph has no edges")
    delta = g.max_degree()
    try:
        found = find_edge_coloring(g, delta, budget)
    except BudgetExhausted:
        if raise_on_budget:
            raise
        return ChromaticIndexResult(None, None, exhausted=True)
    if found is not None:
        return ChromaticIndexResult(delta, found)
    witness = vizing_color(g)
    return ChromaticIndexResult(delta + 1, witness)


def is_class2(g: Graph, budget: OracleBudget = DEFAULT_BUDGET) -> bool:
    return find_edge_coloring(g, g.max_degree(), budget) is None


def is_critical(g: Graph, budget: OracleBudget = DEFAULT_BUDGET) -> bool:
    """Class 2, and deleting any edge leaves a Δ(g)-edge-colorable graph."""
    if g.m == 0 or not is_class2(g, budget):
        return False
    delta = g.max_degree()
    return all(
        find_edge_coloring(g.without_edge(*e), delta, budget) is not None for e in g.edges()
    )


def critical_subgraph(g: Graph, budget: OracleBudget = DEFAULT_BUDGET) -> Graph:
    """A critical spanning subgraph with the same Δ (isolated vertices kept).

    Edges are tried for deletion in lexicographic order; a deletion sticks if
    the remainder keeps Δ and stays class 2.
    """
    if g.m == 0:
        raise GraphError("graph has no edges")
    delta = g.max_degree()
    if not is_class2(g, budget):
        raise PreconditionError("graph is class 1; it has no critical subgraph of equal Δ")
    h = g
    for e in g.edges():
        trial = h.without_edge(*e)
        if trial.max_degree() == delta and find_edge_coloring(trial, delta, budget) is None:
            h = trial
    if not is_critical(h, budget):  # pragma: no cover - greedy deletion guarantees it
        raise AssertionError("greedy deletion produced a non-critical graph")
    return h


def check_val(g: Graph) -> bool:
    """Vizing's adjacency lemma: each neighbor w of v has at least
    ``max(Δ + 1 - d(v), 2)`` neighbors of degree Δ."""
    delta = g.max_degree()
    big = [sum(1 for x in g.neighbors(w) if g.degree(x) == delta) for w in g.vertices()]
    for e in g.edges():
        for v, w in ((e.u, e.v), (e.v, e.u)):
            if big[w] < max(delta + 1 - g.degree(v), 2):
                return False
    return True


def check_hz_lemma(g: Graph, k: int, budget: OracleBudget = DEFAULT_BUDGET) -> bool:
    """For g in G_k with χ'(g) > k: is g in H_k and critical?"""
    from .structure import in_G_k, in_H_k

    if not in_G_k(g, k):
        raise PreconditionError(f"graph is not in G_{k}")
    if not is_class2(g, budget):
        raise PreconditionError(f"graph is {k}-edge-colorable")
    return in_H_k(g, k) and is_critical(g, budget)
