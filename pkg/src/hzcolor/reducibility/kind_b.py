"""Extension for configuration B (e = ux).

Working palette: u sees 0 and 1 (on uu' and uv) and misses 2, 3; x misses 1.
Case 1 has 0 on the pendant uu', Case 2 has 0 on uv. Both cases drive the
pair (color of yz ; color missing at z) through a fixed sequence of swaps at
z; the tables below list, for each pair, the second color of the next swap
(the first is the color z misses).
"""

from __future__ import annotations

from .base import Extender, Restart

SWAP23 = {2: 3, 3: 2}

# Case 1, while xx'=2 and xy=0: walk towards (2;0).
_C1_TO_20 = {
    (3, 0): 2, (3, 2): 1, (3, 1): 3, (1, 3): 0, (1, 0): 2,
    (1, 2): 1, (2, 1): 3, (2, 3): 0, (2, 0): 2,
}
# Case 1, once xx'=0 and xy=2: walk towards (3;0).
_C1_TO_30 = {
    (0, 2): 1, (0, 1): 3, (0, 3): 0, (1, 0): 3,
    (1, 3): 1, (3, 1): 2, (3, 2): 0, (1, 2): 2,
}
# Case 2: walk towards (2;0).
_C2_TO_20 = {
    (1, 0): 2, (1, 2): 1, (2, 1): 0, (2, 3): 1,
    (3, 2): 0, (3, 0): 1, (3, 1): 3,
}


class ExtendB(Extender):
    kind = "B"

    def dispatch(self) -> None:
        if self.pend("u") == 0:
            self.case1()
        elif self.col("uv") == 0:
            self.case2()
        raise self.fail("u does not see 0")

    def zstate(self) -> tuple[int, int]:
        return self.col("yz"), self.miss1("z")  # type: ignore[return-value]

    # -- 0 on uu' --------------------------------------------------------

    def w_sees_0(self) -> None:
        """w seeing 0 always leads to a finish."""
        self.enter("B.C1.w0")
        if self.col("vw") == 0:
            if self.col("wx") == 3:
                self.permute(SWAP23)
            self.expect(self.col("wx") == 2, "wx=2")
        elif self.col("wx") == 0:
            if self.col("vw") == 3:
                self.permute(SWAP23)
            self.expect(self.col("vw") == 2, "vw=2")
        else:
            if self.col("wx") == 3:
                self.permute(SWAP23)
            self.try_finish()
            raise self.fail("w misses 1 but u, x are still (1,2)-linked")
        self.swap("w", 1, 3)
        raise self.fail("(1,3)-swap at w should separate u and x")

    def c1_frame(self) -> bool:
        return (
            self.col("uv") == 1
            and self.col("vw") == 2
            and self.col("wx") == 3
            and self.pend("w") == 1
        )

    def case1(self) -> None:
        self.enter("B.C1")
        if self.sees("w", 0):
            self.w_sees_0()
        if self.col("vw") == 3:
            self.permute(SWAP23)
        self.expect(self.c1_frame(), "vw=2, wx=3, ww'=1")
        if self.col("xy") == 0:
            self.enter("B.C1.xy0")
            if not self.linked("u", "w", 0, 2):
                self.swap("w", 0, 2)
                raise Restart()
            if not self.linked("u", "x", 0, 3):
                self.swap("x", 0, 3)
                raise Restart()
            for _ in range(len(_C1_TO_20) + 1):
                i, j = self.zstate()
                self.swap("z", j, _C1_TO_20[(i, j)])
                if not self.c1_frame() or self.col("xy") != 0:
                    raise Restart()
            raise self.fail("walk at z did not reach (2;0)")
        self.expect(self.col("xy") == 2 and self.pend("x") == 0, "xy=2, xx'=0")
        self.enter("B.C1.xy2")
        for _ in range(len(_C1_TO_30) + 1):
            i, j = self.zstate()
            if (i, j) == (3, 0):
                self.case1_tail()
            k = _C1_TO_30[(i, j)]
            self.swap("z", j, k)
            if (i, j) == (1, 2):
                raise self.fail("(1,2)-chain at z should end at x")
            if (i, j) == (3, 2) and self.col("xy") == 0:
                self.swap("z", 0, 3)
                raise Restart()
            if not self.c1_frame() or self.col("xy") != 2:
                raise Restart()
        raise self.fail("walk at z did not reach (3;0)")

    def case1_tail(self) -> None:
        self.enter("B.C1.tail")
        if not self.linked("w", "x", 0, 1):
            self.swap("w", 0, 1)
            raise Restart()
        if self.hend("v", 0, 1) in ("inf", "z"):
            self.recolor([self.chain("v", 0, 1, in_h=True)], {"vw": 0, "uv": 2, "ux": 1})
        self.expect(self.hend("z", 0, 1) == "inf", "(0,1)-chain at z leaves H")
        self.recolor([self.chain("z", 0, 1, in_h=True)], {})
        if self.hend("w", 1, 2) in ("inf", "z"):
            self.recolor([self.chain("w", 1, 2, in_h=True)], {"vw": 1, "uv": 2, "ux": 1})
        self.expect(self.hend("z", 1, 2) == "inf", "(1,2)-chain at z leaves H")
        self.recolor([self.chain("z", 1, 2, in_h=True)], {})
        for a, b, finish in (
            ("z", "y", {"yz": 2, "xy": 1, "ux": 2}),
            ("z", "w", {"yz": 2, "xy": 3, "wx": 1, "ux": 2}),
            ("y", "w", {"yz": 2, "xy": 1, "wx": 2, "vw": 1, "uv": 2, "ux": 3}),
        ):
            chains = self.paired(a, b, 1, 3)
            if chains:
                self.recolor(chains, finish)
        raise self.fail("no usable pairing of (1,3)-chains at v, w, y, z")

    # -- 0 on uv ---------------------------------------------------------

    def c2_frame(self) -> bool:
        return (
            self.col("uv") == 0
            and self.pend("u") == 1
            and self.col("vw") == 3
            and self.pend("w") == 1
            and self.col("wx") == 2
        )

    def case2(self) -> None:
        self.enter("B.C2")
        if self.col("wx") == 0:
            m = self.miss1("w")
            if m in (2, 3):
                self.swap("w", 1, m)
                raise Restart()
            self.set({"wx": 1})
            raise Restart()
        if self.col("wx") == 3:
            self.permute(SWAP23)
        self.expect(self.col("wx") == 2, "wx=2")
        if self.sees("w", 0):
            self.swap("w", 1, 3)
            raise self.fail("w missing 1 should separate u and x")
        if self.col("vw") == 1:
            flipped = self.m.replace(u=self.m["w"], w=self.m["u"])
            self.move_e(flipped, {"ux": 2})
        self.expect(self.col("vw") == 3 and self.pend("w") == 1, "vw=3, ww'=1")
        if self.col("xy") == 3:
            self.swap("x", 0, 3)
            raise Restart()
        self.expect(self.col("xy") == 0 and self.pend("x") == 3, "xy=0, xx'=3")
        self.enter("B.C2.walk")
        for _ in range(2 * len(_C2_TO_20)):
            if not self.c2_frame() or self.col("xy") != 0:
                raise Restart()
            if not self.linked("w", "u", 0, 2):
                self.swap("w", 0, 2)
                raise Restart()
            if not self.linked("u", "x", 0, 1):
                self.swap("x", 0, 1)
                raise Restart()
            if not self.linked("w", "x", 0, 1):
                self.swap("w", 0, 1)
                raise self.fail("w missing 1 should separate u and x")
            i, j = self.zstate()
            if (i, j) == (2, 0):
                self.swap("z", 0, 2)
                raise Restart()
            if (i, j) == (1, 3):
                self.swap("x", 0, 3)
                self.shift("z", 3, 0)
                self.expect(self.zstate() == (1, 0), "state (1;0)")
                self.swap("z", 0, 2)
                if self.col("xy") == 3:
                    self.swap("x", 0, 3)
                continue
            self.swap("z", j, _C2_TO_20[(i, j)])
        raise self.fail("walk at z did not reach (2;0)")
