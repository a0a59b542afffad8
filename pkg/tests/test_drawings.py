"""Hand-drawn configuration states: every completion extends, and each case
handler finishes (or hands back to the driver) when entered directly."""

from __future__ import annotations

import pytest

from drawings import ALL_NAMES, by_name
from hzcolor.reducibility import EXTENDERS, ExtendA, FallThrough, extend, kempe_search_extend
from hzcolor.reducibility.base import Restart, _Finished

# fixture -> the handler it depicts the entry state of
HANDLERS = {
    "a-case1": "case1",
    "a-case2-first": "case2_first",
    "a-case2-recolored": "case2_recolored",
    "a-case3-ww3": "case3",
    "b-case1": "case1_tail",
    "b-case2": "case2",
    "c-case1": "case1_tail",
    "c-case2b-entry": "case2b",
    "c-case2a-entry": "case2a",
    "c-case2b-final": "case2b_final",
}

# Drawings in which every edge color is fixed: the handler must finish.
FULLY_DRAWN = {"a-case1", "a-case2-first", "a-case2-recolored", "b-case1", "b-case2", "c-case2b-final"}


@pytest.mark.parametrize("name", ALL_NAMES)
def test_drawing_is_a_proper_partial_coloring(name):
    fx = by_name(name)
    fx.match.validate(fx.graph)
    cols = fx.colorings()
    assert cols
    for c in cols:
        assert c.is_proper()
        assert c.uncolored_edges() == [fx.match.e]


@pytest.mark.parametrize("name", ALL_NAMES)
def test_every_completion_extends(name):
    fx = by_name(name)
    for c in fx.colorings():
        tr = extend(fx.graph, fx.match, c)
        assert tr.final is not None and tr.final.is_total() and tr.final.is_proper()
        alt = kempe_search_extend(fx.graph, fx.match.e, c)
        assert alt.is_total() and alt.is_proper()


def _enter(name: str, c):
    fx = by_name(name)
    x = EXTENDERS[fx.match.kind](fx.graph, fx.match, c)
    try:
        getattr(x, HANDLERS[name])()
    except _Finished:
        return "finished", x
    except Restart:
        return "restart", x
    except FallThrough as exc:
        return f"refused: {exc}", x
    return "returned", x


@pytest.mark.parametrize("name", sorted(FULLY_DRAWN))
def test_handler_finishes_drawn_state(name):
    (c,) = by_name(name).colorings()
    outcome, x = _enter(name, c)
    assert outcome == "finished"
    x._restore_palette()
    assert x.c.is_total() and x.c.is_proper()


@pytest.mark.parametrize("name", sorted(set(HANDLERS) - FULLY_DRAWN))
def test_handler_on_open_drawing(name):
    """Each completion either finishes, hands a new state back to the driver
    (which then finishes), or is refused by an explicit entry check; at least
    one completion finishes inside the handler."""
    finished = 0
    for c in by_name(name).colorings():
        outcome, x = _enter(name, c)
        if outcome == "finished":
            finished += 1
            x._restore_palette()
            assert x.c.is_total() and x.c.is_proper()
        elif outcome == "restart":
            fx = by_name(name)
            tr = extend(fx.graph, fx.match, x.c)
            assert tr.final is not None and tr.final.is_proper() and tr.final.is_total()
        else:
            assert outcome.startswith("refused: ") and "expected" in outcome
    assert finished > 0


def test_observation_assignment():
    fx = by_name("a-observation")
    (c,) = fx.colorings()
    obs = ExtendA(fx.graph, fx.match, c).observation()
    assert obs == {"vz": 3, "wy": 3, "vw": 0, "wx": 2, "vx": 1}
