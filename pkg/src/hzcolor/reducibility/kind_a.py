"""Extension for configuration A (e = vz).

Working palette after normalization: z sees 0 and 1 on its pendant edges
and misses 2, 3; v misses 1. The three cases are split by which edge at v
carries color 0: the pendant vv', the edge vx, or the edge vw.
"""

from __future__ import annotations

from .base import INF, Extender, Restart

SWAP23 = {2: 3, 3: 2}


class ExtendA(Extender):
    kind = "A"

    def dispatch(self) -> None:
        if self.pend("v") == 0:
            self.case1()
        elif self.col("vx") == 0:
            self.case2()
        elif self.col("vw") == 0:
            self.case3()
        raise self.fail("no edge at v is colored 0")

    def observation(self) -> dict[str, int] | None:
        """When no pendant edge uses 3 and the pendant edges at v, w, x have
        distinct colors, H can be colored outright."""
        for p in "vwxyz":
            if 3 in self.pend_colors(p):
                return None
        pv, pw, px = self.pend("v"), self.pend("w"), self.pend("x")
        if len({pv, pw, px}) < 3:
            return None
        return {"vz": 3, "wy": 3, "vw": px, "wx": pv, "vx": pw}

    def observe(self) -> None:
        finish = self.observation()
        if finish is not None:
            self.set(finish)

    def recolor_then_observe(self, p: str, i: int, j: int) -> None:
        def finish() -> dict[str, int]:
            out = self.observation()
            if out is None:
                raise self.fail("observation should apply")
            return out

        self.recolor([self.chain(p, i, j, in_h=True)], finish)

    # -- 0 on the pendant edge at v ------------------------------------

    def case1(self) -> None:
        self.enter("A.C1")
        if self.col("vw") == 3:
            self.permute(SWAP23)
        self.expect(self.col("vw") == 2 and self.col("vx") == 3, "vw=2, vx=3")
        if self.col("wx") == 0:
            self.expect(self.pend("x") == 1, "xx'=1")
            self.swap("x", 1, 2)
            raise self.fail("(1,2)-swap at x should separate v and z")
        self.expect(self.col("wx") == 1 and self.pend("x") == 2, "wx=1, xx'=2")
        if self.col("wy") == 0:
            self.enter("A.C1.wy0")
            if self.sees("y", 1):
                (m,) = self.miss("y") & {2, 3}
                self.swap("y", 1, m)
            self.expect(not self.sees("y", 1), "y misses 1")
            self.swap("y", 0, 1)
            raise self.fail("(0,1)-swap at y should separate v and z")
        self.enter("A.C1.wy3")
        self.expect(self.col("wy") == 3 and self.sees("y", 1), "wy=3 and y sees 1")
        if 2 in self.miss("y"):
            self.swap("y", 1, 2)
            raise self.fail("(1,2)-swap at y should separate v and z")
        self.expect(self.miss("y") == {0}, "y misses 0")
        self.swap("y", 0, 1)
        self.set({"vx": 0, "vz": 3})

    # -- 0 on vx ---------------------------------------------------------

    def case2(self) -> None:
        self.enter("A.C2")
        self.observe()
        if self.pend("v") == 3:
            self.permute(SWAP23)
        self.expect(self.pend("v") == 2 and self.col("vw") == 3, "vv'=2, vw=3")
        if self.col("wx") == 1:
            self.swap("x", 1, 2)
            raise Restart()
        self.expect(self.col("wx") == 2, "wx=2")
        if self.pend("x") == 1:
            self.swap("x", 1, 3)
            raise Restart()
        if self.col("wy") == 0:
            self.swap("w", 0, 1)
            raise Restart()
        self.expect(self.col("wy") == 1 and self.pend("w") == 0, "wy=1, ww'=0")
        self.expect(self.sees("y", 3), "y sees 3")
        if not self.sees("y", 2):
            self.enter("A.C2.y-misses-2")
            self.swap("x", 1, 3)
            self.swap("y", 1, 2)
            raise self.fail("(1,3)-chain at v should end at x")
        self.enter("A.C2.to-first")
        self.swap("y", 0, 1)
        for p in "xy":
            if not self.sees(p, 1):
                self.swap(p, 1, 3)
        self.case2_first()

    def case2_first(self) -> None:
        self.enter("A.C2.first")
        self.expect(
            (self.col("vx"), self.col("wx"), self.col("vw"), self.col("wy")) == (0, 2, 3, 0)
            and (self.pend("v"), self.pend("w"), self.pend("x")) == (2, 1, 1)
            and self.pend_colors("y") == {1, 2},
            "the first Case 2 state",
        )
        for p in "wx":
            if self.hend(p, 0, 1) == INF:
                self.recolor_then_observe(p, 0, 1)
        self.expect(self.hend("y", 0, 1) == INF, "(0,1)-chain at y ends outside H")
        self.recolor([self.chain("y", 0, 1, in_h=True)], {"vx": 3, "wy": 3, "vw": 0})
        self.case2_recolored()

    def case2_recolored(self) -> None:
        self.enter("A.C2.recolored")
        p_chain = self.chain("w", 1, 2, in_h=True)
        end = self.hend("w", 1, 2)
        if end == "x":
            self.recolor([p_chain], {"wy": 1, "wx": 3, "vx": 1, "vz": 3})
        if end == "v":
            self.recolor([p_chain], {"wy": 1, "wx": 3, "vx": 2, "vz": 3})
        if end not in ("y", "z", INF):
            raise self.fail(f"(1,2)-chain at w ends at {end}")
        self.recolor([p_chain], {"wx": 0, "vw": 1})
        if end == "y":
            self.enter("A.C2.recolored.y")
            if self.hend("w", 0, 2) != "v":
                self.recolor_then_observe("w", 0, 2)
            self.recolor([self.chain("z", 0, 2, in_h=True)], {"vz": 0})
        if end == "z":
            self.enter("A.C2.recolored.z")
            for p, finish in (
                ("z", {"vz": 0}),
                ("x", {"wx": 1, "vw": 0, "vz": 1}),
                ("y", {"wy": 0, "wx": 3, "vx": 0, "vz": 3}),
            ):
                if self.hend(p, 0, 1) == INF:
                    self.recolor([self.chain(p, 0, 1, in_h=True)], finish)
            raise self.fail("some (0,1)-chain at x, y, z must leave H")
        if end == INF:
            self.enter("A.C2.recolored.inf")
            if self.hend("z", 0, 2) == INF:
                self.recolor([self.chain("z", 0, 2, in_h=True)], {"vz": 0})
            for p in "vw":
                if self.hend(p, 0, 2) == INF:
                    self.recolor_then_observe(p, 0, 2)
            raise self.fail("some (0,2)-chain at v, w, z must leave H")

    # -- 0 on vw ---------------------------------------------------------

    def case3(self) -> None:
        self.enter("A.C3")
        if self.pend("v") == 3:
            self.permute(SWAP23)
        self.expect(self.pend("v") == 2 and self.col("vx") == 3, "vv'=2, vx=3")
        if self.col("wy") == 3:
            self.enter("A.C3.wy3")
            if not self.sees("y", 0):
                self.swap("x", 0, 3)
                raise Restart()
            if self.sees("y", 1):
                self.swap("y", 1, 2)
                raise Restart()
            self.expect(
                self.col("wx") == 2 and self.pend("w") == 1 and self.pend("x") == 1,
                "wx=2, ww'=1, xx'=1",
            )
            if self.edge("vw") not in self.chain("x", 0, 1).edges:
                self.swap("x", 0, 1)
                raise self.fail("x missing 1 should separate v and z")
            self.swap("y", 0, 1)
            raise Restart()
        self.expect(self.pend("w") == 3, "ww'=3")
        if self.col("wx") == 2:
            self.enter("A.C3.wx2")
            self.expect(self.col("wy") == 1 and self.pend("x") == 1, "wy=1, xx'=1")
            if not self.sees("y", 3):
                self.swap("y", 1, 3)
                raise Restart()
            if not self.linked("v", "z", 0, 2):
                self.swap("x", 0, 2)
                raise Restart()
            if not self.sees("y", 2):
                self.swap("y", 0, 2)
                raise Restart()
            self.swap("y", 0, 3)
            raise Restart()
        self.enter("A.C3.wx1")
        self.expect(self.col("wx") == 1 and self.col("wy") == 2, "wx=1, wy=2")
        if self.pend("x") == 0:
            self.swap("x", 1, 2)
            raise self.fail("(1,2)-swap at x should separate v and z")
        self.expect(self.pend("x") == 2, "xx'=2")
        if not self.sees("y", 0):
            if not self.linked("y", "z", 0, 2):
                self.swap("y", 0, 2)
                raise Restart()
            self.swap("x", 0, 2)
            self.swap("x", 1, 2)
            raise self.fail("swaps at x should separate v and z")
        if not self.sees("y", 3):
            self.swap("y", 1, 3)
            raise Restart()
        self.swap("y", 1, 2)
        raise Restart()
