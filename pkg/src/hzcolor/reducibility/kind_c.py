"""Extension for configuration C (e = st).

Working palette: t sees 0 and 1 on its pendant edges and misses 2, 3; s misses
1, so s sees 0, 2, 3 on su, sv, sw. Case 1 has 0 on su. In Case 2, 0 is on sw
after possibly exchanging v and w; when t or u is adjacent to w the instance
is handed to configuration A.
"""

from __future__ import annotations

from ..graph import Edge
from ..structure import ConfigMatch
from .base import INF, Assign, Extender, Restart
from .kind_a import ExtendA

SWAP23 = {2: 3, 3: 2}

# Recolorings that move 0 from sw onto su (Case 2a and the Case 2b finish).
_2A_BASE = {"vy": 3, "wy": 0, "sw": 3, "sv": 1, "su": 0, "st": 2}


class ExtendC(Extender):
    kind = "C"

    def dispatch(self) -> None:
        if self.col("su") == 0:
            self.case1()
        self.case2()

    def swap_xy(self) -> ConfigMatch:
        return self.m.replace(x=self.m["y"], y=self.m["x"])

    def other_three(self, p: str, avoid: int) -> int:
        v = self.r(p)
        cands = [w for w in self.g.neighbors(v) if self.g.degree(w) == 3 and w != avoid]
        if len(cands) != 1:
            raise self.fail(f"{p} needs exactly two 3-neighbors")
        return cands[0]

    # -- Case 1: 0 on su -------------------------------------------------

    def case1(self) -> None:
        self.enter("C.C1")
        if self.col("sv") == 3:
            self.permute(SWAP23)
        self.expect(self.col("sv") == 2 and self.col("sw") == 3, "sv=2, sw=3")
        if not self.shift("u", 1, 2) and self.shift("u", 3, 1):
            raise Restart()
        if 2 not in self.miss("u"):
            raise Restart()
        if self.col("vx") != 0:
            if self.col("vy") == 0 or self.col("vx") == 1:
                raise Restart(self.swap_xy())
            self.c1_pendant_zero()
        if self.col("vy") == 3:
            self.c1_vy3()
        self.expect(
            (self.col("vx"), self.col("vy"), self.pend("v")) == (0, 1, 3), "vx=0, vy=1, vv'=3"
        )
        self.case1_tail()

    def c1_pendant_zero(self) -> None:
        self.enter("C.C1.vv0")
        self.expect(self.col("vx") == 3 and self.col("vy") == 1, "vx=3, vy=1")
        if not self.linked("u", "t", 0, 2):
            self.swap("u", 0, 2)
            raise Restart()
        if not self.sees("y", 0):
            self.swap("y", 0, 2)
            raise self.fail("y missing 2 should separate s and t")
        self.swap("y", 1, 3)
        self.expect(self.col("vx") == 1 and self.col("vy") == 3, "vx=1, vy=3")
        if not self.linked("u", "t", 0, 2):
            self.swap("u", 0, 2)
            raise Restart()
        if not self.sees("x", 0):
            self.swap("x", 0, 2)
            raise self.fail("x missing 2 should separate s and t")
        self.swap("x", 1, 3)
        raise self.fail("one of the two placements should separate s and t")

    def c1_vy3(self) -> None:
        self.enter("C.C1.vy3")
        self.expect(self.pend("v") == 1, "vv'=1")
        if not self.sees("x", 2):
            self.swap("x", 0, 2)
            raise Restart()
        if self.shift("x", 1, 3):
            raise Restart()
        if not self.sees("y", 1):
            self.swap("y", 1, 3)
            raise Restart()
        if self.shift("y", 2, 0):
            raise Restart()
        if not self.linked("u", "t", 0, 2):
            self.swap("u", 0, 2)
            raise Restart()
        self.swap("x", 0, 3)
        if not self.linked("u", "t", 0, 2):
            self.swap("u", 0, 2)
            raise Restart()
        raise self.fail("(0,3)-swap at x should separate u and t")

    def case1_tail(self) -> None:
        self.enter("C.C1.tail")
        if not self.linked("u", "t", 0, 2):
            self.swap("u", 0, 2)
            raise Restart()
        self.expect(self.sees("x", 2), "x sees 2")
        if not self.sees("y", 0):
            self.swap("y", 0, 2)
            raise self.fail("y missing 2 should separate s and t")
        if self.sees("x", 1):
            self.expect(self.miss("x") == {3} and self.miss("y") == {3}, "x and y miss 3")
            cx = self.chain("x", 1, 3)
            cy = self.chain("y", 1, 3)
            self.flip(cx)
            if frozenset(cy.edges) != frozenset(cx.edges):
                self.flip(cy)
        p = self.chain("x", 1, 2)
        if self.m["u"] not in p:
            self.flip(p)
            if not self.linked("u", "t", 0, 2):
                self.swap("u", 0, 2)
                raise Restart()
            raise self.fail("u and t should be (0,2)-unlinked")
        self.flip(p)
        self.set({"su": 1, "sv": 0, "vx": 2, "st": 2})

    # -- Case 2: 0 on sv or sw ---------------------------------------------

    def case2(self) -> None:
        self.enter("C.C2")
        self.handoff_to_a()
        if self.col("sv") == 0:
            zh = self.other_three("w", self.m["z"])
            xs = (self.m["x"], self.m["y"])
            pool = [a for a in xs if a not in (self.m["z"], zh)]
            self.expect(bool(pool), "a 3-neighbor of v outside N(w)")
            raise Restart(
                self.m.replace(v=self.m["w"], w=self.m["v"], x=self.m["z"], y=zh, z=pool[0])
            )
        self.expect(self.col("sw") == 0, "sw=0")
        if self.col("su") == 3:
            self.permute(SWAP23)
        self.expect(self.col("su") == 2 and self.col("sv") == 3, "su=2, sv=3")
        if 3 in self.miss("u"):
            self.swap("u", 1, 3)
            raise self.fail("u missing 1 should separate s and t")
        self.expect(self.miss("u") == {0}, "u misses 0")
        if not self.linked("u", "s", 0, 1):
            self.swap("u", 0, 1)
            raise self.fail("u missing 1 should separate s and t")
        self.settle_z()

    def handoff_to_a(self) -> None:
        s, t, u = self.m["s"], self.m["t"], self.m["u"]
        sub = None
        for hub, leg in (("w", "z"), ("v", "x"), ("v", "y")):
            h, y = self.m[hub], self.m[leg]
            if self.g.has_edge(u, h) and y != u:
                sub = ConfigMatch.of("A", v=s, z=t, w=h, x=u, y=y)
            elif self.g.has_edge(t, h) and y != t:
                sub = ConfigMatch.of("A", v=s, z=u, w=h, x=t, y=y)
            if sub is not None:
                break
        if sub is None:
            return
        self.enter("C.C2.to-A")
        if sub.e != self.m.e:
            self.move_e_inline(sub.e, {Edge.of(s, t): self.col("su")})  # type: ignore[dict-item]
        child = ExtendA(
            self.g, sub, self.c, budget=self.budget, trace=self.trace, prefix="C>"
        )
        child.seen_states = self.seen_states
        try:
            child.run()
        finally:
            self.c = child.c
            self.perm = [child.perm[x] for x in self.perm]
        self._done()

    def move_e_inline(self, e_new: Edge, assignment: dict) -> None:
        self.c.unassign(*e_new)
        self._record(Assign(e_new, None))
        for e, col in assignment.items():
            self.c.assign(e.u, e.v, col)
            self._record(Assign(e, col))

    def c2_frame(self) -> bool:
        return (
            self.col("sw") == 0
            and self.col("su") == 2
            and self.col("sv") == 3
            and self.miss("u") == {0}
            and self.pend_colors("t") == {0, 1}
        )

    def finish_via(self, start: int) -> None:
        """The (0,1)-chain at ``start`` runs through w to s: flip it, move 0 to su."""
        ch = self.chain(start, 0, 1)
        self.expect(self.m["s"] in ch, "(0,1)-chain reaches s")
        self.flip(ch)
        self.set({"su": 0, "st": 2})

    def settle_z(self) -> None:
        for _ in range(12):
            self.enter("C.C2.z")
            if not self.c2_frame():
                raise Restart()
            z = self.m["z"]
            if self.sees(z, 0):
                if not self.shift(z, 1, 0):
                    self.shift(z, next(iter(self.miss(z))), 1)
                continue
            wz = self.col("wz")
            if wz == 1:
                self.finish_via(z)
            if wz == 3:
                self.case2b()
            zh = self.other_three("w", z)
            self.expect(zh not in (self.m["t"], self.m["u"]), "second 3-neighbor of w is not t, u")
            cw = self.c.color(self.m["w"], zh)
            mh = self.miss1(zh)
            if cw == 3:
                if mh == 0:
                    if zh == self.m["x"]:
                        raise Restart(self.swap_xy())
                    if zh == self.m["y"]:
                        self.case2a()
                    raise Restart(self.m.replace(z=zh))
                self.expect(mh in (1, 2), "second 3-neighbor misses 1 or 2")
                self.swap(zh, mh, mh - 1)
                continue
            self.expect(cw == 1, "w's second 3-edge colored 1 or 3")
            if mh == 0:
                self.finish_via(zh)
            self.swap(zh, 1, mh)
        raise self.fail("could not get z to miss 0")

    # -- Case 2a: wy = 3 and y misses 0 ------------------------------------

    def case2a(self) -> None:
        self.enter("C.C2a")
        self.expect(
            self.col("wy") == 3 and self.miss("y") == {0} and self.col("wz") == 2,
            "wy=3, y misses 0, wz=2",
        )
        vx = self.col("vx")
        if vx == 2:
            self.expect(self.col("vy") == 1, "vy=1")
            self.set(_2A_BASE)
        if vx == 1:
            self.expect(self.col("vy") == 2 and self.sees("x", 3), "vy=2, x sees 3")
            if 2 in self.miss("x"):
                self.set({**_2A_BASE, "vx": 2})
            self.expect(self.miss("x") == {0}, "x misses 0")
            if self.hend("x", 0, 2) == INF:
                self.recolor([self.chain("x", 0, 2, in_h=True)], {**_2A_BASE, "vx": 2})
            if self.hend("v", 0, 2) == INF:
                self.recolor([self.chain("v", 0, 2, in_h=True)], {**_2A_BASE, "vx": 0})
            self.expect(self.hend("t", 0, 2) == INF, "a (0,2)-chain at t, v, x leaves H")
            self.recolor([self.chain("t", 0, 2, in_h=True)], {})
            for q in "uvyz":
                chains = self.paired("t", q, 0, 1)
                if chains:
                    self.recolor(chains, {"st": 1, "vx": 0} if q == "v" else {"st": 1})
            last = {"su": 1, "sv": 2, "vy": 3, "wy": 0, "sw": 3, "st": 0}
            for q, finish in (
                ("z", last),
                ("v", {**last, "vx": 0}),
                ("y", {**last, "wy": 2, "wz": 0}),
            ):
                chains = self.paired("u", q, 0, 1)
                if chains:
                    self.recolor(chains, finish)
            raise self.fail("(0,1)-chain at u has no usable end")
        self.expect(vx == 0, "vx in {0, 1, 2}")
        if self.col("vy") == 1:
            self.set(_2A_BASE)
        self.expect(self.col("vy") == 2 and self.pend("v") == 1, "vy=2, vv'=1")
        if self.shift("x", 1, 2) or self.shift("x", 3, 1):
            raise Restart()
        self.expect(self.miss("x") == {2}, "x misses 2")
        u_chain = self.chain("u", 0, 1)
        if self.m["s"] not in u_chain:
            self.flip(u_chain)
            self.set({"su": 1, "st": 2})
        if self.hend("x", 0, 1) == "u":
            self.recolor([self.chain("x", 0, 1, in_h=True)], {"vx": 2, "vy": 0})
            raise Restart()
        for q, finish in (
            ("x", {**_2A_BASE, "vx": 2}),
            ("z", {**_2A_BASE, "vx": 2}),
            ("y", {**_2A_BASE, "vx": 2, "wy": 2, "wz": 0}),
        ):
            chains = self.paired("v", q, 0, 1)
            if chains:
                self.recolor(chains, finish)
        raise self.fail("(0,1)-chain at v has no usable end")

    # -- Case 2b: wz = 3 and z misses 0 ------------------------------------

    def c2b_frame(self) -> bool:
        return self.c2_frame() and self.col("wz") == 3 and self.miss("z") == {0}

    def case2b(self) -> None:
        self.enter("C.C2b")
        if not self.c2b_frame():
            raise Restart()
        if self.col("vx") != 1:
            self.c2b_vx1()
        if self.col("vy") == 0:
            self.c2b_vy2()
        self.expect(self.col("vy") == 2 and self.pend("v") == 0, "vy=2, vv'=0")
        mx, my = self.miss1("x"), self.miss1("y")
        if mx == 2:
            if my == 1:
                self.swap("y", 1, 3)
                raise Restart()
            if my == 0:
                self.swap("x", 1, 2)
                raise Restart(self.swap_xy())
            self.swap("x", 1, 2)
            raise self.fail("(1,2)-swap at x should separate s and t")
        self.expect(mx == 0, "x misses 0 or 2")
        if my == 0:
            if self.m["v"] not in self.chain("x", 0, 3):
                self.swap("x", 0, 3)
                raise self.fail("(0,3)-swap at x should separate s and t")
            self.swap("y", 0, 3)
            raise Restart()
        if my == 1:
            self.swap("y", 1, 3)
            raise Restart()
        self.case2b_final()

    def c2b_vx1(self) -> None:
        self.enter("C.C2b.vx")
        if self.col("vy") == 1:
            raise Restart(self.swap_xy())
        if self.col("vx") == 0:
            raise Restart(self.swap_xy())
        self.expect(self.col("vx") == 2 and self.col("vy") == 0, "vx=2, vy=0")
        mx = self.miss1("x")
        if mx == 1:
            self.swap("x", 1, 2)
            raise Restart()
        if mx == 3:
            self.expect(self.sees("x", 1), "x sees 1")
            self.swap("x", 1, 3)
            raise Restart()
        if not self.linked("u", "t", 0, 3):
            self.swap("u", 0, 3)
            self.swap("u", 1, 3)
            raise self.fail("swaps at u should separate s and t")
        if not self.sees("y", 3):
            self.swap("x", 0, 3)
            raise Restart()
        if not self.sees("y", 2):
            self.swap("y", 1, 2)
            raise Restart()
        ch = self.chain("y", 0, 1)
        if ch.far_end(self.m["y"]) != self.m["z"]:
            self.flip(ch)
            raise Restart()
        self.swap("x", 0, 1)
        self.swap("x", 1, 2)
        raise Restart()

    def c2b_vy2(self) -> None:
        self.enter("C.C2b.vy")
        self.expect(self.pend("v") == 2, "vv'=2")
        mx, my = self.miss1("x"), self.miss1("y")
        if (mx, my) == (0, 3):
            self.swap("x", 0, 1)
            raise self.fail("(0,1)-swap at x should separate s and t")
        if my == 1:
            self.swap("y", 1, 3)
            raise Restart()
        if (mx, my) == (0, 2):
            self.swap("y", 1, 2)
            raise Restart()
        if (mx, my) == (2, 2):
            for p, frm, to in (
                ("x", 2, 1), ("y", 2, 1), ("x", 1, 3), ("y", 1, 3),
                ("x", 3, 0), ("x", 0, 1), ("x", 1, 2),
            ):
                self.shift(p, frm, to)
            raise Restart()
        self.expect((mx, my) == (2, 3), "missing pair (2,3)")
        if self.hend("x", 0, 1) != "w":
            self.recolor(
                [self.chain("x", 0, 1, in_h=True)], {"vx": 0, "vy": 3, "sv": 1, "st": 3}
            )
        q_end = self.hend("u", 0, 1)
        if q_end in ("z", INF):
            self.recolor([self.chain("u", 0, 1, in_h=True)], {"su": 1, "st": 2})
        self.expect(q_end == "y", "(0,1)-chain at u ends at y")
        self.recolor(
            [self.chain("u", 0, 1, in_h=True)],
            {"vy": 3, "sv": 0, "sw": 3, "wz": 0, "su": 1, "st": 2},
        )

    def case2b_final(self) -> None:
        self.enter("C.C2b.final")
        self.expect(
            self.miss("x") == {0} and self.miss("y") == {3} and self.col("vx") == 1,
            "the colors of the final state",
        )
        chains = self.paired("y", "x", 1, 2)
        if chains:
            self.recolor(chains, {"vx": 2, "vy": 1})
            self.try_finish()
            raise self.fail("s and t should now be (1,3)-unlinked")
        chains = self.paired("y", "u", 1, 2)
        if chains:
            self.recolor(chains, {"vy": 3, "sv": 2, "su": 1, "st": 3})
        chains = self.paired("y", "t", 1, 2)
        if chains:
            self.recolor(chains, {"vy": 3, "sv": 2, "sw": 3, "wz": 0, "su": 0, "st": 1})
        raise self.fail("(1,2)-chain at y has no usable end")
