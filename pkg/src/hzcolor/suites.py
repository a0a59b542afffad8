"""Verification suites behind ``hzcolor verify``."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .coloring import CYCLE, EdgeColoring, kempe_chain, swap
from .generate import random_h4
from .graph import Graph, emit_graph6, is_k5_minus_e, is_overfull, parse_graph6, petersen_minus_vertex
from .harness import RunConfig, color_minus_e, sweep
from .oracle import DEFAULT_BUDGET, OracleBudget, check_hz_lemma, check_val, chromatic_index, is_class2, is_critical
from .reducibility import ExtensionError, SearchExhausted, extend, kempe_search_extend
from .structure import ConfigMatch, enumerate_configurations, in_G_k

SUITES = ("lemmas", "theorem", "val", "hz", "kempe")

# Role exchanges that keep a configuration and its designated edge.
ROLE_SYMMETRIES: dict[str, tuple[tuple[str, str], ...]] = {"A": (), "B": (), "C": (("x", "y"),)}


@dataclass
class SuiteReport:
    suite: str
    checked: int = 0
    failures: list[dict] = field(default_factory=list)
    stats: dict[str, int] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def bump(self, key: str, by: int = 1) -> None:
        self.stats[key] = self.stats.get(key, 0) + by

    def fail(self, **info) -> None:
        self.failures.append(info)

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "checked": self.checked,
            "stats": dict(sorted(self.stats.items())),
            "failures": self.failures,
        }


# -- Kempe engine ---------------------------------------------------------


def random_partial_coloring(g: Graph, rng: random.Random, k: int = 4) -> EdgeColoring:
    """Greedy proper coloring with random edge order and random free colors;
    edges with no free color stay uncolored."""
    c = EdgeColoring(g, k)
    edges = list(g.edges())
    rng.shuffle(edges)
    for e in edges:
        free = sorted(c.missing_colors(e.u) & c.missing_colors(e.v))
        if free:
            c.assign(e.u, e.v, rng.choice(free))
    return c


def _chain_ok(c: EdgeColoring, ch) -> str | None:
    i, j = ch.colors
    cols = [c.color(*e) for e in ch.edges]
    if any(x not in (i, j) for x in cols):
        return "chain uses a foreign color"
    if any(a == b for a, b in zip(cols, cols[1:])):
        return "chain does not alternate"
    if ch.shape == CYCLE:
        if len(ch.edges) % 2 or ch.vertices[0] != ch.vertices[-1]:
            return "cycle is odd or open"
        return None
    if len(set(ch.vertices)) != len(ch.vertices):
        return "path repeats a vertex"
    for end in {ch.vertices[0], ch.vertices[-1]}:
        if sum(c.sees(end, x) for x in (i, j)) > (1 if ch.edges else 0):
            return "path is not maximal"
    return None


def verify_kempe(trials: int = 10_000, seed: int = 0, per_graph: int = 50) -> SuiteReport:
    """Chains are alternating paths or even cycles; a swap keeps properness
    and the uncolored set; swapping twice restores the coloring."""
    rep = SuiteReport("kempe")
    rng = random.Random(seed)
    g = c = None
    for t in range(trials):
        if t % per_graph == 0:
            g = random_h4(rng.choice([5, 7, 8, 9, 10, 12, 16, 20]), rng.randrange(2**32))
            c = random_partial_coloring(g, rng)
        assert g is not None and c is not None
        v = rng.randrange(g.n)
        i, j = rng.sample(range(4), 2)
        ch = kempe_chain(c, v, i, j)
        why = _chain_ok(c, ch)
        once = swap(c, ch)
        if why is None and not once.is_proper():
            why = "swap broke properness"
        if why is None and set(once.uncolored_edges()) != set(c.uncolored_edges()):
            why = "swap changed the uncolored set"
        if why is None and swap(once, kempe_chain(once, v, i, j)) != c:
            why = "double swap is not the identity"
        rep.checked += 1
        if why:
            rep.fail(graph6=emit_graph6(g), vertex=v, colors=[i, j], trial=t, error=why)
        if rng.random() < 0.2:
            c = once
    return rep


# -- reducibility ---------------------------------------------------------


@dataclass(frozen=True)
class StressInstance:
    graph: Graph
    match: ConfigMatch
    coloring: EdgeColoring
    seed: int


HARDEN_STEPS = 300


def is_hard(c: EdgeColoring, e) -> bool:
    """The endpoints of e share no missing color and are linked for every
    pair of their missing colors."""
    a, b = e
    ma, mb = c.missing_colors(a), c.missing_colors(b)
    if ma & mb:
        return False
    return all(b in kempe_chain(c, a, i, j) for i in ma for j in mb)


def _apply_symmetry(m: ConfigMatch, pairs: Iterable[tuple[str, str]]) -> ConfigMatch:
    for a, b in pairs:
        m = m.replace(**{a: m[b], b: m[a]})
    return m


def stress_instance(
    kind: str,
    seed: int,
    n_range: tuple[int, int] = (8, 14),
    scramble: int = 20,
    harden: bool = True,
) -> StressInstance:
    """A generated host with a kind-``kind`` configuration and a coloring of
    G - e: colored as ``classify`` would, then scrambled by random Kempe
    swaps, a random color permutation and a random role symmetry.

    With ``harden``, half the instances keep swapping (up to a bound) until
    no single swap at the endpoints of e frees a color."""
    rng = random.Random(seed)
    while True:
        g = random_h4(rng.randint(*n_range), rng.randrange(2**32))
        if is_k5_minus_e(g):
            continue
        ms = [m for m in enumerate_configurations(g) if m.kind == kind]
        if ms:
            break
    m = rng.choice(ms)
    syms = [p for p in ROLE_SYMMETRIES[kind] if rng.random() < 0.5]
    m = _apply_symmetry(m, syms)
    c = color_minus_e(g, m.e, RunConfig(seed=rng.randrange(2**32)))
    colored = [e for e, _ in c.items()]

    def kick(c: EdgeColoring) -> EdgeColoring:
        e = rng.choice(colored)
        i, j = rng.sample(range(4), 2)
        return swap(c, kempe_chain(c, rng.choice(e), i, j))

    for _ in range(rng.randrange(scramble + 1)):
        c = kick(c)
    if harden and rng.random() < 0.5:
        for _ in range(HARDEN_STEPS):
            if is_hard(c, m.e):
                break
            c = kick(c)
    perm = list(range(4))
    rng.shuffle(perm)
    c = EdgeColoring.from_mapping(g, {(e.u, e.v): perm[col] for e, col in c.items()})
    return StressInstance(g, m, c, seed)


def verify_lemmas(
    per_kind: int = 1000,
    seed: int = 0,
    n_range: tuple[int, int] = (8, 14),
    bfs_cutoff: int = 14,
) -> SuiteReport:
    rep = SuiteReport("lemmas")
    for k_idx, kind in enumerate("ABC"):
        for t in range(per_kind):
            inst_seed = seed * 1_000_003 + k_idx * 10_000_019 + t
            inst = stress_instance(kind, inst_seed, n_range)
            rep.checked += 1
            info = dict(kind=kind, seed=inst_seed, graph6=emit_graph6(inst.graph))
            try:
                tr = extend(inst.graph, inst.match, inst.coloring)
            except ExtensionError as exc:
                rep.fail(error=f"{type(exc).__name__}: {exc}", **info)
                continue
            fin = tr.final
            if fin is None or not (fin.is_total() and fin.is_proper()):
                rep.fail(error="final coloring does not verify", **info)
                continue
            rep.bump(f"{kind}.ok")
            rep.bump(f"{kind}.swaps", tr.swaps)
            if is_hard(inst.coloring, inst.match.e):
                rep.bump(f"{kind}.hard")
            if any(lbl.endswith(".escape") for lbl in tr.labels()):
                rep.bump(f"{kind}.escape")
            if inst.graph.n <= bfs_cutoff:
                try:
                    out = kempe_search_extend(
                        inst.graph, inst.match.e, inst.coloring, vertices=inst.match.vertices()
                    )
                    assert out.is_total() and out.is_proper()
                    rep.bump(f"{kind}.bfs")
                except SearchExhausted as exc:
                    rep.fail(error=f"search oracle: {exc}", **info)
    return rep


# -- corpus suites ----------------------------------------------------------


def _graphs(lines: Iterable[str], max_n: int | None = None) -> Iterable[Graph]:
    for ln in lines:
        if not ln.strip():
            continue
        g = parse_graph6(ln)
        if max_n is None or g.n <= max_n:
            yield g


def verify_theorem(lines: Iterable[str], cfg: RunConfig = RunConfig()) -> SuiteReport:
    """Class 2 exactly on K5 - e, verified colorings, oracle agreement."""
    rep = SuiteReport("theorem")
    for rec in sweep(lines, cfg):
        if "summary" in rec:
            rep.stats.update({f"sweep.{k}": v for k, v in rec["summary"].items()})
            continue
        if rec["verdict"] == "skipped":
            continue
        rep.checked += 1
        g6 = rec["graph6"]
        if rec["verdict"] == "error":
            rep.fail(graph6=g6, error=rec.get("error", ""))
        elif rec["verdict"] == "class2" and not is_k5_minus_e(parse_graph6(g6)):
            rep.fail(graph6=g6, error="class 2 verdict on a graph other than K5-e")
        elif rec.get("agree") is False:
            rep.fail(graph6=g6, error="verdict disagrees with the exact oracle")
        else:
            rep.bump(rec["verdict"])
            if "oracle" in rec:
                rep.bump("oracle_checked")
    return rep


def verify_val(
    lines: Iterable[str], budget: OracleBudget = DEFAULT_BUDGET, max_n: int = 8
) -> SuiteReport:
    """VAL on every critical graph, and overfull graphs are class 2."""
    rep = SuiteReport("val")
    for g in _graphs(lines, max_n):
        if g.m == 0:
            continue
        rep.checked += 1
        class2 = is_class2(g, budget)
        if is_overfull(g):
            rep.bump("overfull")
            if not class2:
                rep.fail(graph6=emit_graph6(g), error="overfull graph is class 1")
        if class2 and is_critical(g, budget):
            rep.bump("critical")
            if not check_val(g):
                rep.fail(graph6=emit_graph6(g), error="critical graph violates VAL")
    return rep


def verify_hz(lines: Iterable[str], budget: OracleBudget = DEFAULT_BUDGET, max_n: int = 8) -> SuiteReport:
    """Class 2 members of G_4 are critical members of H_4 (and only K5 - e
    occurs); the Petersen graph minus a vertex has chromatic index 4."""
    rep = SuiteReport("hz")
    p = petersen_minus_vertex()
    rep.checked += 1
    if chromatic_index(p, budget).value != 4:
        rep.fail(graph6=emit_graph6(p), error="chromatic index of P* is not 4")
    for g in _graphs(lines, max_n):
        if g.m == 0 or not in_G_k(g, 4):
            continue
        rep.checked += 1
        if not is_class2(g, budget):
            continue
        rep.bump("class2")
        if not check_hz_lemma(g, 4, budget):
            rep.fail(graph6=emit_graph6(g), error="class 2 member of G_4 outside H_4 or not critical")
        elif not is_k5_minus_e(g):
            rep.fail(graph6=emit_graph6(g), error="class 2 member of G_4 other than K5-e")
    return rep


CORPUS_SUITES: dict[str, Callable[..., SuiteReport]] = {
    "theorem": verify_theorem,
    "val": verify_val,
    "hz": verify_hz,
}
