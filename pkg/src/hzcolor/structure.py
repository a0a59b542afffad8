"""Membership in the classes G_k / H_k and the three reducible configurations.

Configuration patterns (degree of each role in the host graph in brackets):

* ``A``: v[4] z[3] w[4] x[3] y[3]; edges vz vw vx wx wy; designated edge vz.
* ``B``: u[3] v[4] w[3] x[4] y[4] z[3]; edges ux uv vw wx xy yz; designated edge ux.
* ``C``: s[4] t[3] u[3] v[4] w[4] x[3] y[3] z[3]; edges st su sv sw vx vy wz;
  designated edge st.

Matches are subgraphs, not necessarily induced.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .graph import Edge, Graph, core, is_connected, is_k5_minus_e


class StructureError(ValueError):
    pass


class NoConfigurationError(RuntimeError):
    """The probe found no configuration; for valid input this is a bug."""


@dataclass(frozen=True)
class Pattern:
    kind: str
    roles: tuple[str, ...]
    degrees: dict[str, int]
    edges: tuple[tuple[str, str], ...]
    designated: tuple[str, str]


PATTERNS: dict[str, Pattern] = {
    "A": Pattern(
        "A",
        ("v", "z", "w", "x", "y"),
        {"v": 4, "z": 3, "w": 4, "x": 3, "y": 3},
        (("v", "z"), ("v", "w"), ("v", "x"), ("w", "x"), ("w", "y")),
        ("v", "z"),
    ),
    "B": Pattern(
        "B",
        ("u", "v", "w", "x", "y", "z"),
        {"u": 3, "v": 4, "w": 3, "x": 4, "y": 4, "z": 3},
        (("u", "x"), ("u", "v"), ("v", "w"), ("w", "x"), ("x", "y"), ("y", "z")),
        ("u", "x"),
    ),
    "C": Pattern(
        "C",
        ("s", "t", "u", "v", "w", "x", "y", "z"),
        {"s": 4, "t": 3, "u": 3, "v": 4, "w": 4, "x": 3, "y": 3, "z": 3},
        (("s", "t"), ("s", "u"), ("s", "v"), ("s", "w"), ("v", "x"), ("v", "y"), ("w", "z")),
        ("s", "t"),
    ),
}


@dataclass(frozen=True)
class ConfigMatch:
    """An embedding of one configuration: role name -> host vertex."""

    kind: str
    roles: tuple[tuple[str, int], ...]

    @classmethod
    def of(cls, kind: str, **roles: int) -> "ConfigMatch":
        pat = PATTERNS[kind]
        if set(roles) != set(pat.roles):
            raise StructureError(f"kind {kind} needs roles {pat.roles}, got {sorted(roles)}")
        return cls(kind, tuple((r, roles[r]) for r in pat.roles))

    @property
    def pattern(self) -> Pattern:
        return PATTERNS[self.kind]

    def __getitem__(self, role: str) -> int:
        for r, v in self.roles:
            if r == role:
                return v
        raise KeyError(role)

    def role_map(self) -> dict[str, int]:
        return dict(self.roles)

    def vertices(self) -> frozenset[int]:
        return frozenset(v for _, v in self.roles)

    @property
    def e(self) -> Edge:
        a, b = self.pattern.designated
        return Edge.of(self[a], self[b])

    def edges(self) -> frozenset[Edge]:
        return frozenset(Edge.of(self[a], self[b]) for a, b in self.pattern.edges)

    def replace(self, **changes: int) -> "ConfigMatch":
        roles = self.role_map()
        roles.update(changes)
        return ConfigMatch.of(self.kind, **roles)

    def validate(self, g: Graph) -> None:
        pat = self.pattern
        verts = [v for _, v in self.roles]
        if len(set(verts)) != len(verts):
            raise StructureError(f"role vertices not distinct: {self.roles}")
        for r, v in self.roles:
            if not 0 <= v < g.n:
                raise StructureError(f"role {r} -> {v} out of range")
            if g.degree(v) != pat.degrees[r]:
                raise StructureError(
                    f"role {r} -> {v} has degree {g.degree(v)}, expected {pat.degrees[r]}"
                )
        for a, b in pat.edges:
            if not g.has_edge(self[a], self[b]):
                raise StructureError(f"missing configuration edge {a}{b}")

    def is_valid(self, g: Graph) -> bool:
        try:
            self.validate(g)
        except StructureError:
            return False
        return True

    def to_json(self) -> dict:
        return {"kind": self.kind, "roles": self.role_map(), "e": self.e.key()}


# -- class membership --------------------------------------------------


def _big_neighbors(g: Graph, v: int, k: int) -> int:
    return sum(1 for w in g.neighbors(v) if g.degree(w) == k)


def in_G_k(g: Graph, k: int) -> bool:
    """Max degree k and every k-vertex has at most two k-neighbors."""
    if g.max_degree() != k:
        return False
    return all(_big_neighbors(g, v, k) <= 2 for v in g.vertices() if g.degree(v) == k)


def in_H_k(g: Graph, k: int) -> bool:
    """Δ = k, δ = k - 1, core a disjoint union of cycles, every vertex has a Δ-neighbor."""
    if g.n == 0 or g.max_degree() != k or g.min_degree() != k - 1:
        return False
    c, _ = core(g)
    if any(c.degree(v) != 2 for v in c.vertices()):
        return False
    return all(_big_neighbors(g, v, k) >= 1 for v in g.vertices())


# -- brute-force enumeration (independent oracle) ----------------------


def _embeddings(g: Graph, pat: Pattern) -> Iterator[dict[str, int]]:
    order = pat.roles
    adj_roles = {r: set() for r in order}
    for a, b in pat.edges:
        adj_roles[a].add(b)
        adj_roles[b].add(a)
    by_degree: dict[int, list[int]] = {}
    for v in g.vertices():
        by_degree.setdefault(g.degree(v), []).append(v)
    assigned: dict[str, int] = {}

    def rec(i: int) -> Iterator[dict[str, int]]:
        if i == len(order):
            yield dict(assigned)
            return
        role = order[i]
        used = set(assigned.values())
        placed = [assigned[o] for o in adj_roles[role] if o in assigned]
        # candidates adjacent to an already placed neighbor role, if any
        pool = g.neighbors(placed[0]) if placed else by_degree.get(pat.degrees[role], ())
        for v in pool:
            if v in used or g.degree(v) != pat.degrees[role]:
                continue
            if all(g.has_edge(v, assigned[o]) for o in adj_roles[role] if o in assigned):
                assigned[role] = v
                yield from rec(i + 1)
                del assigned[role]

    yield from rec(0)


def enumerate_configurations(g: Graph) -> list[ConfigMatch]:
    """Every embedding of every pattern, by exhaustive role assignment."""
    out: list[ConfigMatch] = []
    if g.m == 0:
        return out
    for kind, pat in PATTERNS.items():
        for roles in _embeddings(g, pat):
            out.append(ConfigMatch.of(kind, **roles))
    return out


# -- the constructive probe --------------------------------------------


def _split_neighbors(g: Graph, v: int) -> tuple[list[int], list[int]]:
    threes = [w for w in g.neighbors(v) if g.degree(w) == 3]
    fours = [w for w in g.neighbors(v) if g.degree(w) == 4]
    return threes, fours


def find_configuration_at(g: Graph, v: int) -> ConfigMatch:
    """Locate a configuration near the 4-vertex ``v`` of a graph in H_4.

    Follows the case analysis: first look for an adjacent pair (3-neighbor,
    4-neighbor) of ``v``; otherwise compare the 3-neighborhoods of the two
    4-neighbors.
    """
    threes, fours = _split_neighbors(g, v)
    if g.degree(v) != 4 or len(threes) != 2 or len(fours) != 2:
        raise StructureError(f"vertex {v} does not have two 3- and two 4-neighbors")

    def three_nbrs(x: int) -> list[int]:
        return [y for y in g.neighbors(x) if g.degree(y) == 3]

    def four_nbrs(x: int) -> list[int]:
        return [y for y in g.neighbors(x) if g.degree(y) == 4]

    for w2 in threes:
        for w3 in fours:
            if not g.has_edge(w2, w3):
                continue
            w1 = threes[1] if w2 == threes[0] else threes[0]
            w4 = fours[1] if w3 == fours[0] else fours[0]
            if not g.has_edge(w3, w1):
                y = next(t for t in three_nbrs(w3) if t != w2)
                return ConfigMatch.of("A", v=v, z=w1, w=w3, x=w2, y=y)
            extra = [t for t in three_nbrs(w4) if t not in (w1, w2)]
            if extra:
                return ConfigMatch.of("B", u=w1, v=w3, w=w2, x=v, y=w4, z=extra[0])
            if g.has_edge(w3, w4):
                raise NoConfigurationError("component is K5-e")
            x = next(t for t in four_nbrs(w4) if t != v)
            zb = three_nbrs(x)[0]
            return ConfigMatch.of("B", u=w1, v=v, w=w2, x=w4, y=x, z=zb)

    w1, w2 = threes
    w3, w4 = fours
    t3, t4 = three_nbrs(w3), three_nbrs(w4)
    common = sorted(set(t3) & set(t4))
    if len(common) <= 1:
        xs = sorted(t3)
        z = min(t for t in t4 if t not in xs)
        return ConfigMatch.of("C", s=v, t=w1, u=w2, v=w3, w=w4, x=xs[0], y=xs[1], z=z)
    a, b = common
    return ConfigMatch.of("B", u=a, v=w3, w=b, x=w4, y=v, z=w1)


def find_configuration(g: Graph) -> ConfigMatch:
    """A configuration in a connected graph of H_4 other than K5-e."""
    if g.n == 0 or not is_connected(g):
        raise StructureError("graph must be connected")
    if not in_H_k(g, 4):
        raise StructureError("graph is not in H_4")
    if is_k5_minus_e(g):
        raise StructureError("K5-e contains no reducible configuration")
    for v in g.vertices():
        if g.degree(v) == 4:
            m = find_configuration_at(g, v)
            try:
                m.validate(g)
            except StructureError as exc:
                raise NoConfigurationError(f"probe at {v} built an invalid match: {exc}") from exc
            return m
    raise NoConfigurationError("no 4-vertex to probe")  # pragma: no cover
