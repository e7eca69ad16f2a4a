from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bmmn.decomposition import find_strips
from bmmn.grid import build_grid, enumerate_strip_paths
from bmmn.io import preset_ball
from bmmn.norm import Point, distance, is_shortest_legal_path


def test_two_terminal_grid(square):
    g = build_grid(square, [(0, 0), (2, 3)], 0)
    assert (g.nx, g.ny) == (2, 2)
    assert len(g.vertices()) == 4
    assert len(g.edges()) == 4


def test_three_terminal_grid(square):
    g = build_grid(square, [(0, 0), (2, 3), (5, 3)], 0)
    assert g.lines_k == [0, 3]
    assert g.lines_k1 == [0, 2, 5]
    assert len(g.vertices()) == 6


def test_hexagon_grid_vertices(hexagon):
    g = build_grid(hexagon, [(0, 0), (3, 2)], 0)
    assert set(g.vertices()) == {Point(0, 0), Point(2, 0), Point(3, 2), Point(1, 2)}


def _vertical_strip(g, a, b):
    i, j = g.terminals.index(Point(*a)), g.terminals.index(Point(*b))
    return next(s for s in find_strips(g) if s.family == "v" and s.pair == (min(i, j), max(i, j)))


def test_strip_paths_count(square):
    g = build_grid(square, [(0, 0), (1, 6), (-3, 2), (4, 3), (2, 4)], 0)
    paths = enumerate_strip_paths(g, _vertical_strip(g, (0, 0), (1, 6)))
    assert [g.ys[p.switch] for p in paths] == [0, 2, 3, 4, 6]
    g = build_grid(square, [(0, 0), (1, 6)], 0)
    assert len(enumerate_strip_paths(g, _vertical_strip(g, (0, 0), (1, 6)))) == 2


def test_degenerate_strip_single_path(square):
    g = build_grid(square, [(2, 3), (5, 3)], 0)
    s = next(s for s in find_strips(g) if s.family == "h")
    assert s.degenerate
    (p,) = enumerate_strip_paths(g, s)
    assert p.switch is None and len(p.edges) == 1


@given(seed=st.integers(0, 10**6), n=st.integers(2, 7),
       name=st.sampled_from(["square", "hexagon", "octagon-rational"]))
def test_switch_paths_are_shortest(seed, n, name):
    import random
    rng = random.Random(seed)
    ball = preset_ball(name)
    T = list({(rng.randint(0, 6), rng.randint(0, 6)) for _ in range(n)})
    if len(T) < 2:
        return
    k = rng.randrange(ball.m)
    g = build_grid(ball, T, k)
    assert len(g.vertices()) <= len(T) ** 2 + len(T)
    for s in find_strips(g):
        for p in enumerate_strip_paths(g, s):
            poly = [g.vertex(*c) for c in p.polyline]
            a, b = g.terminals[s.lo], g.terminals[s.hi]
            assert poly[0] == a and poly[-1] == b
            assert is_shortest_legal_path(ball, poly)
            assert g.length(p.edges) == distance(ball, a, b)


@pytest.mark.parametrize("tag", ["id", "rot", "swap", "swaprot"])
def test_transforms_preserve_edge_lengths(hexagon, tag):
    g = build_grid(hexagon, [(0, 0), (3, 2), (1, 5), (F(7, 2), 1)], 0)
    tg, back = g.transformed(tag)
    assert sorted(tg.edge_length(e) for e in tg.edges()) == \
        sorted(g.edge_length(e) for e in g.edges())
    for e in tg.edges():
        assert g.edge_length(back(e)) == tg.edge_length(e)
    assert {back(e) for e in tg.edges()} == set(g.edges())
