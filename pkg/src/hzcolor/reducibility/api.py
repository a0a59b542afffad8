"""Entry points that pick the procedure for a match's kind."""

from __future__ import annotations

from ..coloring import EdgeColoring
from ..graph import Graph
from ..structure import ConfigMatch
from .base import SWAP_BUDGET, Extender, ExtensionTrace, normalize
from .kind_a import ExtendA
from .kind_b import ExtendB
from .kind_c import ExtendC

EXTENDERS: dict[str, type[Extender]] = {"A": ExtendA, "B": ExtendB, "C": ExtendC}


def extend(
    g: Graph, match: ConfigMatch, coloring: EdgeColoring, *, budget: int = SWAP_BUDGET
) -> ExtensionTrace:
    """Extend a proper 4-coloring of G - e (e = ``match.e``) to all of G."""
    return EXTENDERS[match.kind](g, match, coloring, budget=budget).run()


def _extend_kind(kind: str, g: Graph, match: ConfigMatch, coloring: EdgeColoring, budget: int) -> ExtensionTrace:
    if match.kind != kind:
        raise ValueError(f"expected a kind-{kind} match, got {match.kind}")
    return extend(g, match, coloring, budget=budget)


def extend_a(g: Graph, match: ConfigMatch, coloring: EdgeColoring, *, budget: int = SWAP_BUDGET) -> ExtensionTrace:
    return _extend_kind("A", g, match, coloring, budget)


def extend_b(g: Graph, match: ConfigMatch, coloring: EdgeColoring, *, budget: int = SWAP_BUDGET) -> ExtensionTrace:
    return _extend_kind("B", g, match, coloring, budget)


def extend_c(g: Graph, match: ConfigMatch, coloring: EdgeColoring, *, budget: int = SWAP_BUDGET) -> ExtensionTrace:
    return _extend_kind("C", g, match, coloring, budget)


def normalize_for(
    coloring: EdgeColoring, match: ConfigMatch
) -> tuple[EdgeColoring, tuple[int, ...]] | None:
    """Permute colors into the entry convention at ``match.e``.

    The degree-3 endpoint ends up seeing 0 and 1, the degree-4 endpoint
    missing 1. Returns None when the endpoints already share a missing color.
    """
    g = coloring.graph
    e = match.e
    if coloring.color(*e) is not None:
        raise ValueError("designated edge is already colored")
    if set(coloring.uncolored_edges()) != {e}:
        raise ValueError("coloring must be total on G - e")
    small = e.u if g.degree(e.u) == 3 else e.v
    return normalize(coloring, small, e.other(small))
