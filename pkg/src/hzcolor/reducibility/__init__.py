"""Turning a 4-edge-coloring of G - e into one of G for each configuration."""

from .base import (
    SWAP_BUDGET,
    Assign,
    ExtensionError,
    ExtensionTrace,
    FallThrough,
    LoopDetected,
    Permute,
    Step,
    Swap,
    SwapBudgetExceeded,
    normalize,
    replay,
)
from .api import EXTENDERS, extend, extend_a, extend_b, extend_c, normalize_for
from .kind_a import ExtendA
from .kind_b import ExtendB
from .kind_c import ExtendC
from .search import SearchExhausted, SearchResult, kempe_bfs, kempe_search_extend

__all__ = [
    "EXTENDERS",
    "SearchExhausted",
    "SearchResult",
    "extend",
    "extend_a",
    "extend_b",
    "extend_c",
    "kempe_bfs",
    "kempe_search_extend",
    "normalize_for",
    "SWAP_BUDGET",
    "Assign",
    "ExtendA",
    "ExtendB",
    "ExtendC",
    "ExtensionError",
    "ExtensionTrace",
    "FallThrough",
    "LoopDetected",
    "Permute",
    "Step",
    "Swap",
    "SwapBudgetExceeded",
    "normalize",
    "replay",
]
