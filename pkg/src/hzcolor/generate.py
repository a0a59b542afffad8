"""Random members of H_4.

The 4-vertices are split into disjoint cycles (the core), each 4-vertex gets
two stubs toward 3-vertices, and each 3-vertex gets between one and three of
those stubs; its remaining degree is filled by edges among 3-vertices. Stub
matchings that create loops, parallel edges or a disconnected graph are
resampled.

The cycle lengths are a composition of the number of 4-vertices into parts of
size at least 3, drawn uniformly among all such compositions.
"""

from __future__ import annotations

import random
from functools import lru_cache

from .graph import Graph, GraphError, is_connected
from .structure import in_H_k

MAX_RETRIES = 2000


class GenerationError(GraphError):
    pass


@lru_cache(maxsize=None)
def _compositions(k: int) -> int:
    """Number of compositions of ``k`` into parts >= 3."""
    if k == 0:
        return 1
    return sum(_compositions(k - p) for p in range(3, k + 1))


def random_cycle_lengths(k: int, rng: random.Random) -> list[int]:
    if k < 3:
        raise ValueError("a core cycle needs at least 3 vertices")
    parts: list[int] = []
    while k:
        r = rng.randrange(_compositions(k))
        for p in range(3, k + 1):
            r -= _compositions(k - p)
            if r < 0:
                parts.append(p)
                k -= p
                break
    return parts


def feasible_splits(n: int) -> list[tuple[int, int]]:
    """Pairs (#4-vertices, #3-vertices) that admit an H_4 member on n vertices."""
    out = []
    for k in range(3, n + 1):
        m = n - k
        if m > 0 and m % 2 == 0 and m <= 2 * k <= 3 * m:
            out.append((k, m))
    return out


def _pair_stubs(left: list[int], right: list[int], rng: random.Random) -> list[tuple[int, int]] | None:
    rng.shuffle(right)
    pairs = list(zip(left, right))
    seen = set()
    for a, b in pairs:
        key = (min(a, b), max(a, b))
        if a == b or key in seen:
            return None
        seen.add(key)
    return pairs


def _attempt(n: int, rng: random.Random) -> Graph | None:
    k, m = rng.choice(feasible_splits(n))
    labels = list(range(n))
    rng.shuffle(labels)
    fours, threes = labels[:k], labels[k:]
    edges: list[tuple[int, int]] = []
    pos = 0
    for length in random_cycle_lengths(k, rng):
        cyc = fours[pos : pos + length]
        pos += length
        edges += [(cyc[i], cyc[(i + 1) % length]) for i in range(length)]
    # stubs from 3-vertices toward the core
    share = {t: 1 for t in threes}
    open_ = list(threes)
    for _ in range(2 * k - m):
        t = rng.choice(open_)
        share[t] += 1
        if share[t] == 3:
            open_.remove(t)
    left = [f for f in fours for _ in range(2)]
    right = [t for t in threes for _ in range(share[t])]
    cross = _pair_stubs(left, right, rng)
    if cross is None:
        return None
    stubs = [t for t in threes for _ in range(3 - share[t])]
    rng.shuffle(stubs)
    half = len(stubs) // 2
    inner = _pair_stubs(stubs[:half], stubs[half:], rng)
    if inner is None:
        return None
    all_edges = edges + cross + inner
    if len({(min(a, b), max(a, b)) for a, b in all_edges}) != len(all_edges):
        return None
    g = Graph.from_edges(n, all_edges)
    if not is_connected(g) or not in_H_k(g, 4):
        return None
    return g


def random_h4(n: int, seed: int, *, retries: int = MAX_RETRIES) -> Graph:
    """A connected member of H_4 on ``n`` vertices, determined by ``seed``."""
    if n < 5:
        raise GenerationError(f"no member of H_4 has {n} vertices")
    if not feasible_splits(n):
        raise GenerationError(f"no member of H_4 has {n} vertices")
    rng = random.Random(seed)
    for _ in range(retries):
        g = _attempt(n, rng)
        if g is not None:
            return g
    raise GenerationError(f"no H_4 instance on {n} vertices after {retries} tries (seed {seed})")
