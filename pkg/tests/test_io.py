import json
from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bmmn.io import (ParseError, gen_instance, make_instance, network_to_dict, parse_ball,
                     parse_instance, parse_network, parse_rat, preset_ball, regular_rational)
from bmmn.network import Network
from bmmn.norm import Point, validate_ball
from bmmn.solver import solve_bmmn


def _doc(ball, terminals, name="t"):
    return json.dumps({"name": name, "ball": ball, "terminals": terminals}, indent=1)


def test_square_file(square):
    ball, T, name = parse_instance(_doc([["1", "0"], ["0", "1"]], [["0", "0"], ["2", "3"]]))
    assert ball.m == 2 and ball == square
    assert T == [Point(0, 0), Point(2, 3)] and name == "t"


def test_rational_coordinates():
    _, T, _ = parse_instance(_doc([["1", "0"], ["0", "1"]], [["1/3", "-2/4"]]))
    assert T == [Point(F(1, 3), F(-1, 2))]
    assert parse_rat(" -7/2 ") == F(-7, 2)
    for bad in ["1.5", "1/0x", "", "1//2", 0.5, True]:
        with pytest.raises((ValueError, ZeroDivisionError)):
            parse_rat(bad)


def test_malformed_rational_located():
    text = _doc([["1", "0"], ["0", "1"]], [["0", "0"], ["2.5", "3"]])
    with pytest.raises(ParseError) as e:
        parse_instance(text)
    assert e.value.line is not None and e.value.column is not None
    assert text.splitlines()[e.value.line - 1][e.value.column - 1:].startswith('"2.5"')


def test_bad_json_located():
    with pytest.raises(ParseError) as e:
        parse_instance('{"ball": [\n  ["1", "0"],,\n]}')
    assert e.value.line == 2


def test_degenerate_ball_rejected():
    # two collinear half vertices make the polygon non-strictly convex
    with pytest.raises(ParseError) as e:
        parse_instance(_doc([["1", "0"], ["1", "1"], ["1", "2"]], []))
    assert "NotConvex" in str(e.value)
    with pytest.raises(ParseError):
        parse_ball('{"terminals": []}')


def test_asymmetric_vertex_list():
    # a full vertex list that is not centrally symmetric fails validation
    from bmmn.norm import NotSymmetric
    with pytest.raises(NotSymmetric):
        validate_ball([(1, 0), (0, 1), (-1, 0), (0, -2)])


def test_presets():
    for name in ["square", "hexagon", "octagon-rational", "regular-5", "regular-8"]:
        ball = preset_ball(name)
        assert validate_ball(ball.vertices) == ball
    assert preset_ball("regular-8").m == 8
    assert len(regular_rational(6)) == 6
    with pytest.raises(KeyError):
        preset_ball("circle")


def test_gen_determinism_and_validity():
    a, b = gen_instance(7, 5, "square"), gen_instance(7, 5, "square")
    assert a.to_text() == b.to_text()
    assert gen_instance(8, 5, "square").to_text() != a.to_text()
    one = gen_instance(7, 1)
    assert len(one.terminals) == 1
    ball, T, _ = parse_instance(gen_instance(7, 5, "hexagon").to_text())
    assert ball.m == 3 and len(set(T)) == 5
    with pytest.raises(ValueError):
        gen_instance(1, 10, bbox=1)
    with pytest.raises(ValueError):
        gen_instance(1, 0)


coords = st.fractions(min_value=-50, max_value=50, max_denominator=12)


@given(T=st.lists(st.tuples(coords, coords), min_size=1, max_size=8),
       name=st.sampled_from(["square", "hexagon", "octagon-rational"]))
def test_instance_round_trip(T, name):
    ball = preset_ball(name)
    text = make_instance("x", ball, T).to_text()
    ball2, T2, name2 = parse_instance(text)
    assert ball2 == ball and name2 == "x"
    assert T2 == [Point(*t) for t in T]
    assert make_instance("x", ball2, T2).to_text() == text


def test_network_round_trip(hexagon):
    T = [(0, 0), (3, 2), (F(1, 2), 4), (5, 1)]
    net, _ = solve_bmmn(hexagon, T)
    text = json.dumps(network_to_dict(net))
    back = parse_network(hexagon, text, T)
    assert back.length() == net.length()
    assert back.merged_segments() == net.merged_segments()
    assert json.dumps(network_to_dict(back)) == text
    assert back.verify_manhattan(T).ok


def test_bad_network(square):
    with pytest.raises(ParseError):
        parse_network(square, '{"segments": [{"a": ["0", "0"]}]}')
    with pytest.raises(ParseError):
        parse_network(square, "[")
    assert parse_network(square, '{"segments": []}').length() == Network(square).length()
