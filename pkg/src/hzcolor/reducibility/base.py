"""Shared machinery for turning a 4-edge-coloring of G - e into one of G.

An :class:`Extender` owns a working coloring and a match. Every change to the
coloring goes through one of three recorded actions (Kempe swap, single edge
assignment, palette permutation) so that a finished run can be replayed and
audited step by step.

After every swap the extender checks the two standard ways to finish: the
endpoints of ``e`` share a missing color, or they miss colors ``a`` and ``b``
and are not joined by an (a, b)-chain, in which case one swap frees a color.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping, Union

from ..coloring import (
    ColoringError,
    EdgeColoring,
    KempeChain,
    apply_color_permutation,
    kempe_chain,
)
from ..graph import Edge, Graph
from ..structure import ConfigMatch
from .search import SearchExhausted, kempe_bfs

SWAP_BUDGET = 64
ESCAPE_DEPTH = 3

INF = "inf"


class ExtensionError(RuntimeError):
    """The case analysis could not complete; carries the partial trace."""

    def __init__(self, message: str, trace: "ExtensionTrace | None" = None) -> None:
        super().__init__(message)
        self.trace = trace


class FallThrough(ExtensionError):
    pass


class SwapBudgetExceeded(ExtensionError):
    pass


class LoopDetected(ExtensionError):
    pass


# -- trace -------------------------------------------------------------


@dataclass(frozen=True)
class Swap:
    colors: tuple[int, int]
    start: int
    edges: tuple[Edge, ...]

    def to_json(self) -> dict:
        return {
            "action": "swap",
            "colors": list(self.colors),
            "start": self.start,
            "edges": [e.key() for e in self.edges],
        }


@dataclass(frozen=True)
class Assign:
    edge: Edge
    color: int | None

    def to_json(self) -> dict:
        return {"action": "assign", "edge": self.edge.key(), "color": self.color}


@dataclass(frozen=True)
class Permute:
    perm: tuple[int, ...]

    def to_json(self) -> dict:
        return {"action": "permute", "perm": list(self.perm)}


Action = Union[Swap, Assign, Permute]


@dataclass(frozen=True)
class Step:
    label: str
    action: Action

    def to_json(self) -> dict:
        d = {"label": self.label}
        d.update(self.action.to_json())
        return d


@dataclass
class ExtensionTrace:
    """What happened during one extension, replayable from ``initial``."""

    match: ConfigMatch
    initial: EdgeColoring
    steps: list[Step] = field(default_factory=list)
    final: EdgeColoring | None = None

    @property
    def swaps(self) -> int:
        return sum(1 for s in self.steps if isinstance(s.action, Swap))

    def labels(self) -> list[str]:
        out: list[str] = []
        for s in self.steps:
            if not out or out[-1] != s.label:
                out.append(s.label)
        return out

    def to_json(self) -> dict:
        return {
            "config": self.match.to_json(),
            "steps": [s.to_json() for s in self.steps],
        }


def apply_step(c: EdgeColoring, action: Action) -> EdgeColoring:
    """Apply one action to ``c`` (mutating unless it is a permutation)."""
    if isinstance(action, Permute):
        return apply_color_permutation(c, action.perm)
    if isinstance(action, Assign):
        if action.color is None:
            c.unassign(*action.edge)
        else:
            c.assign(action.edge.u, action.edge.v, action.color)
        return c
    i, j = action.colors
    olds = [c.color(*e) for e in action.edges]
    if any(o not in (i, j) for o in olds):
        raise ColoringError(f"swap {action} touches an edge outside colors {i},{j}")
    for e in action.edges:
        c.unassign(*e)
    for e, o in zip(action.edges, olds):
        c.assign(e.u, e.v, j if o == i else i)
    return c


def replay(initial: EdgeColoring, steps: Iterable[Step]) -> EdgeColoring:
    """Re-run a trace; raises :class:`ColoringError` on any improper state."""
    c = initial.copy()
    for s in steps:
        c = apply_step(c, s.action)
        if not c.is_proper():  # pragma: no cover - assign() already enforces this
            raise ColoringError(f"improper state after {s.label}")
    return c


# -- normalization -----------------------------------------------------


def normalize(c: EdgeColoring, small: int, big: int) -> tuple[EdgeColoring, tuple[int, ...]] | None:
    """Permute colors so ``small`` (degree 3 in G) sees 0 and 1 and ``big``
    (degree 4) misses 1.

    Returns ``(recolored, perm)``; ``None`` when the two already share a
    missing color (nothing to normalize: ``e`` can be colored directly).
    """
    ms, mb = c.missing_colors(small), c.missing_colors(big)
    if ms & mb:
        return None
    if len(mb) != 1 or len(ms) != 2:
        raise ExtensionError("endpoints of e must see exactly 3 and 2 colors")
    (b_miss,) = mb
    other = next(x for x in c.seen_colors(small) if x != b_miss)
    lo, hi = sorted(ms)
    perm = [0] * 4
    perm[other], perm[b_miss], perm[lo], perm[hi] = 0, 1, 2, 3
    return apply_color_permutation(c, perm), tuple(perm)


# -- internal control flow ---------------------------------------------


class _Finished(Exception):
    pass


class Restart(Exception):
    """Re-normalize and re-enter the case analysis, possibly with a new match."""

    def __init__(self, match: ConfigMatch | None = None) -> None:
        super().__init__()
        self.match = match


class Extender:
    """Base class; subclasses implement :meth:`dispatch` for one kind."""

    kind = ""

    def __init__(
        self,
        g: Graph,
        match: ConfigMatch,
        coloring: EdgeColoring,
        *,
        budget: int = SWAP_BUDGET,
        trace: ExtensionTrace | None = None,
        prefix: str = "",
        escape_depth: int = ESCAPE_DEPTH,
    ) -> None:
        if match.kind != self.kind:
            raise ValueError(f"{type(self).__name__} needs a kind-{self.kind} match")
        match.validate(g)
        if coloring.graph != g:
            raise ValueError("coloring is for a different graph")
        e = match.e
        if coloring.color(*e) is not None:
            raise ValueError("designated edge is already colored")
        if set(coloring.uncolored_edges()) != {e}:
            raise ValueError("coloring must be total on G - e")
        if not coloring.is_proper():
            raise ValueError("coloring is not proper")
        self.g = g
        self.m = match
        self.c = coloring.copy()
        self.budget = budget
        self.prefix = prefix
        self.trace = trace if trace is not None else ExtensionTrace(match, coloring.copy())
        self.perm: list[int] = [0, 1, 2, 3]  # working color = perm[input color]
        self.seen_states: set = set()
        self.escape_depth = escape_depth
        self.label = f"{prefix}{self.kind}"

    # -- role helpers ----------------------------------------------------

    def r(self, p: Union[str, int]) -> int:
        return self.m[p] if isinstance(p, str) else p

    def edge(self, name: Union[str, Edge, tuple[int, int]]) -> Edge:
        if isinstance(name, str):
            if len(name) != 2:
                raise KeyError(name)
            return Edge.of(self.m[name[0]], self.m[name[1]])
        return Edge.of(*name)

    def col(self, name: Union[str, Edge]) -> int | None:
        return self.c.color(*self.edge(name))

    @property
    def h_edges(self) -> frozenset[Edge]:
        return self.m.edges()

    @property
    def h_vertices(self) -> frozenset[int]:
        return self.m.vertices()

    def pendant_edges(self, p: Union[str, int]) -> list[Edge]:
        v = self.r(p)
        h = self.h_edges
        return [Edge.of(v, w) for w in self.g.neighbors(v) if Edge.of(v, w) not in h]

    def pend(self, p: Union[str, int]) -> int:
        """Color of the unique pendant edge at ``p``."""
        es = self.pendant_edges(p)
        if len(es) != 1:
            raise FallThrough(f"{self.label}: {p} has {len(es)} pendant edges", self.trace)
        col = self.c.color(*es[0])
        assert col is not None
        return col

    def pend_colors(self, p: Union[str, int]) -> frozenset[int]:
        return frozenset(self.c.color(*e) for e in self.pendant_edges(p))  # type: ignore[misc]

    def miss(self, p: Union[str, int]) -> frozenset[int]:
        return self.c.missing_colors(self.r(p))

    def miss1(self, p: Union[str, int]) -> int:
        """The single missing color of a vertex that sees three."""
        m = self.miss(p)
        if len(m) != 1:
            raise FallThrough(f"{self.label}: {p} misses {sorted(m)}", self.trace)
        return next(iter(m))

    def sees(self, p: Union[str, int], color: int) -> bool:
        return self.c.sees(self.r(p), color)

    @property
    def small(self) -> int:
        a, b = self.m.pattern.designated
        return self.m[a] if self.g.degree(self.m[a]) == 3 else self.m[b]

    @property
    def big(self) -> int:
        e = self.m.e
        return e.other(self.small)

    # -- bookkeeping -----------------------------------------------------

    def fail(self, why: str) -> "FallThrough":
        return FallThrough(f"{self.label}: {why}", self.trace)

    def expect(self, cond: bool, why: str) -> None:
        if not cond:
            raise self.fail(f"expected {why}")

    def enter(self, label: str) -> None:
        """Mark entry into a case; revisiting an identical state is a loop."""
        self.label = f"{self.prefix}{label}"
        boundary = []
        for v in sorted(self.h_vertices):
            for w in self.g.neighbors(v):
                boundary.append((min(v, w), max(v, w), self.c.color(v, w)))
        key = (label, self.m, tuple(sorted(set(boundary), key=repr)))
        if key in self.seen_states:
            raise LoopDetected(f"{self.label}: revisited the same boundary state", self.trace)
        self.seen_states.add(key)

    def _record(self, action: Action) -> None:
        self.trace.steps.append(Step(self.label, action))

    def _count_swap(self) -> None:
        if self.trace.swaps > self.budget:
            raise SwapBudgetExceeded(f"{self.label}: more than {self.budget} swaps", self.trace)

    # -- primitive actions -------------------------------------------------

    def permute(self, mapping: Mapping[int, int]) -> None:
        """Rename colors; ``mapping`` lists the colors that move."""
        perm = list(range(4))
        for a, b in mapping.items():
            perm[a] = b
        if sorted(perm) != [0, 1, 2, 3]:
            raise ValueError(f"not a permutation: {mapping}")
        if perm == [0, 1, 2, 3]:
            return
        self.c = apply_color_permutation(self.c, perm)
        self.perm = [perm[x] for x in self.perm]
        self._record(Permute(tuple(perm)))

    def chain(self, p: Union[str, int], i: int, j: int, *, in_h: bool = False) -> KempeChain:
        excl = self.h_edges if in_h else ()
        return kempe_chain(self.c, self.r(p), i, j, excl)

    def linked(self, p: Union[str, int], q: Union[str, int], i: int, j: int) -> bool:
        return self.r(q) in self.chain(p, i, j)

    def _swap_chain(self, ch: KempeChain, start: int) -> None:
        if not ch.edges:
            return
        action = Swap(ch.colors, start, ch.edges)
        self.c = apply_step(self.c, action)
        self._record(action)
        self._count_swap()

    def swap(self, p: Union[str, int], i: int, j: int) -> None:
        """Interchange ``i`` and ``j`` on the chain through ``p``, then look
        for an immediate finish."""
        v = self.r(p)
        self._swap_chain(self.chain(v, i, j), v)
        self.try_finish()

    def flip(self, ch: KempeChain) -> None:
        """Swap a chain computed earlier in G (not G - E(H)), then look for a finish."""
        self._swap_chain(ch, ch.vertices[0])
        self.try_finish()

    def shift(self, p: Union[str, int], frm: int, to: int) -> bool:
        """If ``p`` misses ``frm`` and sees ``to``, swap so that it misses ``to``."""
        if frm in self.miss(p) and self.sees(p, to):
            self.swap(p, frm, to)
            return True
        return False

    def move_e(self, new: ConfigMatch, assignment: Mapping[Union[str, Edge], int]) -> None:
        """Uncolor the designated edge of ``new`` and color the current one,
        switching to the coloring of G - e' for a different match."""
        e_new = new.e
        old = self.c.color(*e_new)
        if old is None:
            raise self.fail("new designated edge is uncolored")
        self.c.unassign(*e_new)
        self._record(Assign(e_new, None))
        try:
            for k, col in assignment.items():
                e = self.edge(k)
                self.c.assign(e.u, e.v, col)
                self._record(Assign(e, col))
        except ColoringError as exc:
            raise self.fail(f"reassignment is improper: {exc}") from exc
        raise Restart(new)

    def set(self, assignment: Mapping[Union[str, Edge], int | None]) -> None:
        """Reassign a few edges (uncolor all first, then color)."""
        self.recolor((), assignment)

    def recolor(
        self,
        chains: Iterable[KempeChain],
        assignment: Union[Mapping[Union[str, Edge], int | None], Callable[[], Mapping]],
    ) -> None:
        """Uncolor E(H) and the named edges, flip the given chains of
        G - E(H), and write the new colors (old colors for untouched H edges).

        ``assignment`` may be a callable, evaluated after the flips; it may
        then only name edges of H. Coloring ``e`` here finishes the extension.
        """
        deferred = assignment if callable(assignment) else None
        want = {} if deferred else {self.edge(k): v for k, v in assignment.items()}
        touched = sorted(set(self.h_edges) | set(want))
        old = {e: self.c.color(*e) for e in touched}
        seen: set[frozenset] = set()
        flips: list[KempeChain] = []
        for ch in chains:
            key = frozenset(ch.edges)
            if key in seen:
                continue
            seen.add(key)
            if key & set(touched):
                raise self.fail("chain to recolor uses a touched edge")
            flips.append(ch)
        for e in touched:
            if old[e] is not None:
                self.c.unassign(*e)
                self._record(Assign(e, None))
        for ch in flips:
            self._swap_chain(ch, ch.vertices[0])
        if deferred is not None:
            want = {self.edge(k): v for k, v in deferred().items()}
            if not set(want) <= set(touched):
                raise self.fail("deferred assignment names an edge outside H")
        try:
            for e in touched:
                new = want.get(e, old[e])
                if new is not None:
                    self.c.assign(e.u, e.v, new)
                    self._record(Assign(e, new))
        except ColoringError as exc:
            raise self.fail(f"reassignment is improper: {exc}") from exc
        if self.c.color(*self.m.e) is not None:
            self._done()

    def hend(self, p: Union[str, int], i: int, j: int) -> Union[str, int]:
        """Far end of the (i, j)-chain of G - E(H) that starts at ``p``.

        Returns a role name for configuration vertices and :data:`INF` otherwise.
        """
        v = self.r(p)
        ch = self.chain(v, i, j, in_h=True)
        if ch.is_cycle or not ch.edges:
            raise self.fail(f"no ({i},{j})-chain of G-E(H) starts at {p}")
        a, b = ch.ends()
        if v not in (a, b):
            raise self.fail(f"{p} is interior to its ({i},{j})-chain")
        far = b if v == a else a
        for role, x in self.m.roles:
            if x == far:
                return role
        return INF

    def paired(self, p: str, q: str, i: int, j: int) -> list[KempeChain] | None:
        """Chains to flip if ``p`` and ``q`` are treated as joined in G - E(H).

        Either the chain from ``p`` ends at ``q``, or both end outside H, in
        which case flipping both has the same effect on H.
        """
        ep, eq = self.hend(p, i, j), self.hend(q, i, j)
        if ep == q:
            return [self.chain(p, i, j, in_h=True)]
        if ep == INF and eq == INF:
            return [self.chain(p, i, j, in_h=True), self.chain(q, i, j, in_h=True)]
        return None

    # -- finishing -------------------------------------------------------

    def _done(self) -> None:
        if not (self.c.is_total() and self.c.is_proper()):
            raise self.fail("final coloring is not a proper total coloring")
        raise _Finished()

    def try_finish(self) -> None:
        a, b = self.small, self.big
        ma, mb = self.miss(a), self.miss(b)
        common = ma & mb
        if common:
            self.recolor((), {self.m.e: min(common)})
        for alpha in sorted(ma):
            for beta in sorted(mb):
                ch = self.chain(a, alpha, beta)
                if b not in ch:
                    self._swap_chain(ch, a)
                    self.recolor((), {self.m.e: beta})

    def normalize(self) -> None:
        res = normalize(self.c, self.small, self.big)
        if res is None:
            self.try_finish()
            raise self.fail("normalization found a common missing color but did not finish")
        _, perm = res
        self.permute(dict(enumerate(perm)))
        self.try_finish()

    # -- driver ----------------------------------------------------------

    def dispatch(self) -> None:  # pragma: no cover - abstract
        raise NotImplementedError

    def run(self) -> ExtensionTrace:
        try:
            try:
                self._drive()
            except LoopDetected:
                if self.escape_depth <= 0 or self.c.color(*self.m.e) is not None:
                    raise
                self.escape()
        except _Finished:
            pass
        self._restore_palette()
        self.trace.final = self.c.copy()
        return self.trace

    def _drive(self) -> None:
        while True:
            try:
                self.label = f"{self.prefix}{self.kind}.normalize"
                self.normalize()
                self.dispatch()
                raise self.fail("case analysis ended without a coloring")
            except Restart as r:
                if r.match is not None:
                    r.match.validate(self.g)
                    self.m = r.match

    def _finishable(self, c: EdgeColoring) -> bool:
        a, b = self.small, self.big
        ma, mb = c.missing_colors(a), c.missing_colors(b)
        if ma & mb:
            return True
        return any(b not in kempe_chain(c, a, i, j) for i in ma for j in mb)

    def escape(self) -> None:
        """Shortest run of swaps through H that makes ``e`` colorable, used
        only when the case analysis revisits a state. Finishes or raises."""
        self.label = f"{self.prefix}{self.kind}.escape"
        try:
            found = kempe_bfs(
                self.c, self.h_vertices, self._finishable, max_depth=self.escape_depth
            )
        except SearchExhausted:
            found = None
        if found is None:
            raise LoopDetected(f"{self.label}: no finish within {self.escape_depth} swaps", self.trace)
        for ch in found.path:
            self._swap_chain(ch, ch.vertices[0])
        self.try_finish()
        raise self.fail("escape reached a state that did not finish")

    def _restore_palette(self) -> None:
        inv = [0] * 4
        for x, y in enumerate(self.perm):
            inv[y] = x
        if inv != [0, 1, 2, 3] and not self.prefix:
            self.label = f"{self.kind}.restore"
            self.permute(dict(enumerate(inv)))
