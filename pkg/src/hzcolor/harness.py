"""End-to-end driver: classification, G - e coloring, and JSONL sweeps."""

from __future__ import annotations

import json
import os
import random
import time
from dataclasses import dataclass, field
from enum import Enum
from multiprocessing import Pool
from typing import Iterable, Iterator

from .coloring import EdgeColoring
from .graph import (
    Edge,
    Graph,
    GraphError,
    connected_components,
    core_max_degree,
    emit_graph6,
    is_connected,
    is_k5_minus_e,
    is_overfull,
    parse_graph6,
)
from .oracle import (
    DEFAULT_BUDGET,
    BudgetExhausted,
    OracleBudget,
    chromatic_index,
    find_edge_coloring,
)
from .reducibility import ExtensionTrace, SearchExhausted, extend, kempe_bfs
from .structure import ConfigMatch, find_configuration, in_H_k

JOBS_ENV = "HZCOLOR_JOBS"
ORACLE_CUTOFF = 12
INSERT_STATES = 20_000


class OutOfScopeError(ValueError):
    """Input is disconnected, not of maximum degree 4, or has a core vertex
    with three or more core neighbors."""


class Verdict(str, Enum):
    CLASS1 = "class1"
    CLASS2 = "class2"


class Certificate(str, Enum):
    OVERFULL = "Overfull"
    K5_MINUS_E = "K5MinusE"
    ORACLE = "OracleProof"


@dataclass(frozen=True)
class RunConfig:
    seed: int = 0
    budget: OracleBudget = DEFAULT_BUDGET
    fmt: str = "graph6"
    out: str | None = None
    trace: bool = False
    timings: bool = False
    components: bool = False
    oracle_cutoff: int = ORACLE_CUTOFF
    jobs: int = 1

    def __post_init__(self) -> None:
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must fit in 64 bits")
        if self.fmt not in ("graph6", "edgelist"):
            raise ValueError(f"unknown format {self.fmt!r}")
        if self.jobs < 1:
            raise ValueError("jobs must be positive")


def default_jobs() -> int:
    raw = os.environ.get(JOBS_ENV, "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


@dataclass
class ClassificationResult:
    verdict: Verdict
    coloring: EdgeColoring | None = None
    certificate: Certificate | None = None
    route: str = ""
    match: ConfigMatch | None = None
    trace: ExtensionTrace | None = None
    timings: dict[str, float] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if (self.verdict is Verdict.CLASS1) != (self.coloring is not None):
            raise ValueError("a coloring is attached exactly to class 1 verdicts")
        if (self.verdict is Verdict.CLASS2) != (self.certificate is not None):
            raise ValueError("a certificate is attached exactly to class 2 verdicts")


# -- scope and verification ----------------------------------------------


def check_scope(g: Graph) -> None:
    if g.n == 0 or g.m == 0 or not is_connected(g):
        raise OutOfScopeError("graph must be connected with at least one edge")
    if g.max_degree() != 4:
        raise OutOfScopeError(f"maximum degree is {g.max_degree()}, not 4")
    if core_max_degree(g) > 2:
        raise OutOfScopeError("a maximum-degree vertex has more than two maximum-degree neighbors")


def in_scope(g: Graph) -> bool:
    try:
        check_scope(g)
    except OutOfScopeError:
        return False
    return True


def verify_coloring(g: Graph, c: EdgeColoring, k: int = 4) -> None:
    """Raise unless ``c`` is a proper total ``k``-coloring of exactly ``g``."""
    if c.graph != g:
        raise AssertionError("coloring belongs to another graph")
    if not c.is_total():
        raise AssertionError("coloring leaves edges uncolored")
    if not c.is_proper():
        raise AssertionError("coloring is improper")
    if any(col >= k for _, col in c.items()):
        raise AssertionError(f"coloring uses more than {k} colors")


# -- coloring G - e -------------------------------------------------------


def _insert(c: EdgeColoring, e: Edge, rng_states: int) -> EdgeColoring | None:
    """Color ``e`` in the partial coloring ``c``, swapping Kempe chains near
    its endpoints if necessary."""
    g = c.graph

    def shared(x: EdgeColoring) -> bool:
        return bool(x.missing_colors(e.u) & x.missing_colors(e.v))

    if not shared(c):
        near = {e.u, e.v, *g.neighbors(e.u), *g.neighbors(e.v)}
        try:
            found = kempe_bfs(c, near, shared, max_states=rng_states)
        except SearchExhausted:
            found = None
        if found is None:
            return None
        c = found.coloring
    c.assign(e.u, e.v, min(c.missing_colors(e.u) & c.missing_colors(e.v)))
    return c


def color_minus_e(g: Graph, e: tuple[int, int], cfg: RunConfig = RunConfig()) -> EdgeColoring:
    """A proper 4-coloring of every edge of ``g`` except ``e``.

    Edges are inserted greedily in an order drawn from ``cfg.seed``; an edge
    with no common free color is inserted after a short search over Kempe
    swaps near it. If that fails, exact search on G - e decides.
    """
    edge = Edge.of(*e)
    if not g.has_edge(*edge):
        raise GraphError(f"{edge.key()} is not an edge of the graph")
    order = [f for f in g.edges() if f != edge]
    random.Random(cfg.seed).shuffle(order)
    c: EdgeColoring | None = EdgeColoring(g, 4)
    for f in order:
        assert c is not None
        c = _insert(c, f, INSERT_STATES)
        if c is None:
            break
    if c is not None:
        return c
    exact = find_edge_coloring(g.without_edge(*edge), 4, cfg.budget)
    if exact is None:
        raise AssertionError(f"G - {edge.key()} is not 4-edge-colorable")
    out = EdgeColoring(g, 4)
    for f, col in exact.items():
        out.assign(f.u, f.v, col)
    return out


# -- classification --------------------------------------------------------


def classify(g: Graph, cfg: RunConfig = RunConfig()) -> ClassificationResult:
    """Class of a connected graph with maximum degree 4 and core maximum
    degree at most 2; class 1 verdicts carry a verified 4-coloring."""
    check_scope(g)
    t0 = time.perf_counter()
    timings: dict[str, float] = {}
    if is_k5_minus_e(g):
        assert is_overfull(g)
        return ClassificationResult(Verdict.CLASS2, certificate=Certificate.K5_MINUS_E, route="k5-e")
    if not in_H_k(g, 4):
        c = find_edge_coloring(g, 4, cfg.budget)
        timings["oracle"] = time.perf_counter() - t0
        if c is None:
            cert = Certificate.OVERFULL if is_overfull(g) else Certificate.ORACLE
            return ClassificationResult(Verdict.CLASS2, certificate=cert, route="direct", timings=timings)
        verify_coloring(g, c)
        return ClassificationResult(Verdict.CLASS1, coloring=c, route="direct", timings=timings)
    match = find_configuration(g)
    t1 = time.perf_counter()
    timings["configuration"] = t1 - t0
    minus = color_minus_e(g, match.e, cfg)
    t2 = time.perf_counter()
    timings["color_minus_e"] = t2 - t1
    trace = extend(g, match, minus)
    assert trace.final is not None
    timings["extend"] = time.perf_counter() - t2
    verify_coloring(g, trace.final)
    return ClassificationResult(
        Verdict.CLASS1, coloring=trace.final, route="reduction", match=match, trace=trace, timings=timings
    )


# -- sweeps ---------------------------------------------------------------


def _coloring_json(c: EdgeColoring) -> dict[str, int]:
    return {e.key(): col for e, col in c.items()}


def sweep_record(line: str, cfg: RunConfig) -> dict:
    """One JSONL record for one graph6 line (never raises)."""
    text = line.strip()
    rec: dict = {"graph6": text}
    t0 = time.perf_counter()
    try:
        g = parse_graph6(text)
    except GraphError as exc:
        rec.update(verdict="error", error=str(exc))
        return rec
    rec.update(n=g.n, m=g.m)
    parts: list[Graph]
    if cfg.components and g.m and not is_connected(g):
        parts = [g.induced_subgraph(comp)[0] for comp in connected_components(g) if len(comp) > 1]
    else:
        parts = [g]
    if not all(in_scope(p) for p in parts) or not parts:
        rec["verdict"] = "skipped"
        return rec
    verdicts = []
    for p in parts:
        try:
            res = classify(p, cfg)
        except BudgetExhausted as exc:
            rec.update(verdict="error", error=str(exc))
            return rec
        verdicts.append(res)
    worst = max(verdicts, key=lambda r: r.verdict is Verdict.CLASS2)
    rec["verdict"] = worst.verdict.value
    if len(parts) == 1:
        res = verdicts[0]
        rec["route"] = res.route
        if res.coloring is not None:
            rec["coloring"] = _coloring_json(res.coloring)
        if res.match is not None:
            rec["config"] = res.match.to_json()
        if cfg.trace and res.trace is not None:
            rec["trace"] = [s.to_json() for s in res.trace.steps]
    else:
        rec["components"] = [r.verdict.value for r in verdicts]
    if worst.certificate is not None:
        rec["certificate"] = worst.certificate.value
    if g.n <= cfg.oracle_cutoff:
        try:
            oracle_class2 = any(chromatic_index(p, cfg.budget).value == 5 for p in parts)
            rec["oracle"] = "class2" if oracle_class2 else "class1"
            rec["agree"] = rec["oracle"] == rec["verdict"]
        except BudgetExhausted:
            rec["oracle"] = "exhausted"
    if cfg.timings:
        rec["millis"] = round((time.perf_counter() - t0) * 1000)
    return rec


def _work(args: tuple[str, RunConfig]) -> dict:
    return sweep_record(*args)


def sweep(lines: Iterable[str], cfg: RunConfig = RunConfig()) -> Iterator[dict]:
    """Records for every non-blank line, in input order, then a summary."""
    numbered = ((i, ln) for i, ln in enumerate(lines, 1) if ln.strip())
    counts: dict[str, int] = {}
    disagree = 0

    def tally(lineno: int, rec: dict) -> dict:
        nonlocal disagree
        if rec["verdict"] == "error":
            rec["line"] = lineno
        counts[rec["verdict"]] = counts.get(rec["verdict"], 0) + 1
        if rec.get("agree") is False:
            disagree += 1
        return rec

    if cfg.jobs > 1:
        buf = list(numbered)
        with Pool(cfg.jobs) as pool:
            recs = pool.imap(_work, [(ln, cfg) for _, ln in buf], chunksize=64)
            for (lineno, _), rec in zip(buf, recs):
                yield tally(lineno, rec)
    else:
        for lineno, ln in numbered:
            yield tally(lineno, sweep_record(ln, cfg))
    summary = {"total": sum(counts.values()), "disagreements": disagree}
    summary.update(sorted(counts.items()))
    yield {"summary": summary}


def dumps(rec: dict) -> str:
    return json.dumps(rec, sort_keys=True, separators=(",", ":"))


def graph_id(g: Graph) -> str:
    return emit_graph6(g)
