import random
from fractions import Fraction as F

import pytest

from bmmn.completion import (TAGS, complete, side_network, side_networks, solve_1dmmn,
                             solve_direction, staircase_dp)
from bmmn.decomposition import decompose, find_strips, pairs_in_direction
from bmmn.grid import DirGrid, enumerate_strip_paths
from bmmn.io import preset_ball
from bmmn.norm import Point, distance
from conftest import STAIRCASE_T
from oracles import serves_all


def _segs(g, edges):
    return sorted((a, b) for a, b, _ in g.segments(edges))


# ---------------------------------------------------------------- side networks

def test_single_strip_sides(square):
    g = DirGrid(square, [(0, 0), (2, 3)], 0)
    strips = [s for s in find_strips(g) if s.family == "h"]
    sides = side_networks(g, strips)
    assert _segs(g, sides["H1"]) == [(Point(0, 0), Point(2, 0))]
    assert _segs(g, sides["H2"]) == [(Point(0, 3), Point(2, 3))]
    assert g.length(sides["H1"]) == 2
    assert sides["V1"] == sides["V2"] == set()


def test_degenerate_strip_in_both_sides(square):
    g = DirGrid(square, [(2, 3), (5, 3)], 0)
    strips = find_strips(g)
    h1, h2 = side_network(g, strips, "H1"), side_network(g, strips, "H2")
    assert h1 == h2
    assert _segs(g, h1) == [(Point(2, 3), Point(5, 3))]


# ---------------------------------------------------------------- staircase DP

def _staircase(g, orientation="o"):
    return next(s for s in decompose(g).staircases if s.orientation == orientation)


def _pi(g, st, y):
    return next(p for p in enumerate_strip_paths(g, st.crossing.vertical)
                if p.switch is not None and g.ys[p.switch] == y)


def test_worked_staircase_dp(square):
    g = DirGrid(square, STAIRCASE_T, 0)
    st = _staircase(g)
    shelf = st.crossing.horizontal.rect[1]
    cost, edges = staircase_dp(g, st, _pi(g, st, 2), shelf, st.terms)
    assert cost == 1
    assert _segs(g, edges) == [(Point(1, 4), Point(2, 4))]


def test_empty_staircase_dp(square):
    g = DirGrid(square, STAIRCASE_T, 0)
    st = _staircase(g, "o'")
    assert st.empty
    pi = enumerate_strip_paths(g, st.crossing.vertical)[0]
    assert staircase_dp(g, st, pi, st.crossing.horizontal.rect[1], []) == (0, set())


def test_vertical_drop_beats_far_wall(square):
    # the terminal sits 3/2 above the shelf but 3 away from the wall once pi switches at the top
    g = DirGrid(square, [(0, 0), (1, 6), (-3, 2), (4, 3), (3, F(7, 2))], 0)
    st = _staircase(g)
    assert [g.terminals[t] for t in st.terms] == [Point(3, F(7, 2))]
    cost, edges = staircase_dp(g, st, _pi(g, st, 6), st.crossing.horizontal.rect[1], st.terms)
    assert cost == F(3, 2)
    assert _segs(g, edges) == [(Point(3, 2), Point(3, F(7, 2)))]


# ---------------------------------------------------------------- completions

def test_two_terminal_completion(square):
    g = DirGrid(square, [(0, 0), (2, 3)], 0)
    c = complete(g, "H1")
    assert c.total == distance(square, (0, 0), (2, 3)) == 5
    assert _segs(g, c.edges) == [(Point(0, 0), Point(2, 0)), (Point(2, 0), Point(2, 3))]


def test_worked_completions(square):
    g = DirGrid(square, STAIRCASE_T, 0)
    totals = {t: complete(g, t) for t in TAGS}
    h1 = totals["H1"]
    assert h1.lam == 7 and h1.total == 15 and h1.repairs == 0
    assert {t: c.total for t, c in totals.items()} == {t: 15 for t in TAGS}
    assert serves_all(g, h1.edges, pairs_in_direction(g))


def test_single_degenerate_strip_completion(square):
    g = DirGrid(square, [(2, 3), (5, 3)], 0)
    for tag in TAGS:
        c = complete(g, tag)
        assert _segs(g, c.edges) == [(Point(2, 3), Point(5, 3))]
        assert c.total == 3


def test_solve_1dmmn_examples(square, hexagon):
    segs, res, _ = solve_1dmmn(square, [(0, 0), (2, 3)], 0)
    assert res.length == 5
    line = [(0, 0), (4, 0), (1, 0), (9, 0)]
    segs, res, _ = solve_1dmmn(square, line, 0)
    assert res.length == 9
    assert sum(abs(b.x - a.x) for a, b, _ in segs) == 9
    segs, res, _ = solve_1dmmn(hexagon, [(0, 0), (3, 2)], 0)
    assert res.length == distance(hexagon, (0, 0), (3, 2))


def _random_grid(seed):
    rng = random.Random(seed)
    ball = preset_ball(["square", "hexagon", "octagon-rational"][seed % 3])
    n = rng.randint(2, 12)
    box = rng.choice([4, 8, 30])
    T = list({(rng.randint(0, box), rng.randint(0, box)) for _ in range(n)})
    return DirGrid(ball, T, rng.randrange(ball.m))


@pytest.mark.parametrize("seed", range(60))
def test_completions_serve_every_pair(seed):
    g = _random_grid(seed)
    pairs = pairs_in_direction(g)
    res = solve_direction(g, g.k)
    assert serves_all(g, res.edges, pairs)
    assert sum(res.repairs.values()) == 0
    assert res.length == min(res.totals.values())


@pytest.mark.parametrize("seed", range(40))
def test_fast_dp_same_lengths(seed):
    g = _random_grid(seed)
    slow, fast = solve_direction(g, g.k), solve_direction(g, g.k, fast_dp=True)
    assert slow.totals == fast.totals
