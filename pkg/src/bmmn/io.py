"""Instance and network files, ball presets and seeded instance generation.

Files are JSON with every number written as an exact rational string ("3", "-1/2").
"""

from __future__ import annotations

import json
import math
import random
import re
from dataclasses import asdict, dataclass
from fractions import Fraction

from .network import Network
from .norm import BallError, LegalSegment, Point, UnitBall, as_point, validate_ball

_RAT = re.compile(r"\s*[-+]?\d+(/\d+)?\s*$")


class ParseError(ValueError):
    def __init__(self, msg, line=None, column=None):
        self.line, self.column = line, column
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(msg + where)


def rat_str(q: Fraction) -> str:
    return str(Fraction(q))


def parse_rat(s) -> Fraction:
    if isinstance(s, bool) or not isinstance(s, (str, int)):
        raise ValueError(f"expected a rational string, got {s!r}")
    if isinstance(s, int):
        return Fraction(s)
    if not _RAT.match(s):
        raise ValueError(f"malformed rational {s!r}")
    q = Fraction(s.strip())
    return q


def _locate(text: str, needle: str):
    pos = text.find(needle)
    if pos < 0:
        return None, None
    line = text.count("\n", 0, pos) + 1
    col = pos - (text.rfind("\n", 0, pos) + 1) + 1
    return line, col


def _point(text, v, what):
    try:
        if not isinstance(v, list) or len(v) != 2:
            raise ValueError(f"{what}: expected a coordinate pair, got {v!r}")
        return Point(parse_rat(v[0]), parse_rat(v[1]))
    except ValueError as e:
        line, col = _locate(text, json.dumps(v)[1:-1].split(",")[0]) if isinstance(v, list) and v else (None, None)
        raise ParseError(str(e), line, col) from None


# ------------------------------------------------------------------ presets

def regular_rational(m: int, denominator: int = 1000) -> list[Point]:
    """Rational approximation of the regular 2m-gon (first m vertices only).

    Vertices are rounded to the given denominator; the result is validated."""
    out = []
    for k in range(m):
        a = math.pi * k / m
        out.append(Point(Fraction(round(math.cos(a) * denominator), denominator),
                         Fraction(round(math.sin(a) * denominator), denominator)))
    validate_ball(out + [-p for p in out])
    return out


PRESETS = {
    "square": [Point(1, 0), Point(0, 1)],
    "hexagon": [Point(1, 0), Point(Fraction(1, 2), 1), Point(Fraction(-1, 2), 1)],
    "octagon-rational": [Point(1, 0), Point(Fraction(7, 10), Fraction(7, 10)), Point(0, 1),
                         Point(Fraction(-7, 10), Fraction(7, 10))],
}


def preset_half(name: str) -> list[Point]:
    if name in PRESETS:
        return list(PRESETS[name])
    m = re.fullmatch(r"regular-(\d+)", name)
    if m:
        return regular_rational(int(m.group(1)))
    raise KeyError(f"unknown ball preset {name!r}")


def ball_from_half(half) -> UnitBall:
    half = list(half)
    return validate_ball(half + [-p for p in half])


def preset_ball(name: str) -> UnitBall:
    return ball_from_half(preset_half(name))


# ------------------------------------------------------------------ instances

@dataclass
class InstanceFile:
    name: str
    ball: list  # first m vertices as [x, y] rational strings
    terminals: list

    def to_text(self) -> str:
        return json.dumps(asdict(self), indent=1) + "\n"


def make_instance(name, ball: UnitBall, terminals) -> InstanceFile:
    half = ball.vertices[:ball.m]
    return InstanceFile(name, [[rat_str(p.x), rat_str(p.y)] for p in half],
                        [[rat_str(p.x), rat_str(p.y)] for p in map(as_point, terminals)])


def parse_instance(text: str):
    """Return ``(ball, terminals, name)``."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, e.lineno, e.colno) from None
    if not isinstance(data, dict) or "ball" not in data or "terminals" not in data:
        raise ParseError("instance needs 'ball' and 'terminals'", 1, 1)
    half = [_point(text, v, "ball") for v in data["ball"]]
    try:
        ball = ball_from_half(half)
    except BallError as e:
        line, col = _locate(text, '"ball"')
        raise ParseError(f"{type(e).__name__}: {e}", line, col) from None
    terms = [_point(text, v, "terminal") for v in data["terminals"]]
    return ball, terms, data.get("name", "")


def parse_ball(text: str) -> UnitBall:
    """A ball from JSON text holding a ``ball`` list (instance files qualify)."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, e.lineno, e.colno) from None
    if not isinstance(data, dict) or "ball" not in data:
        raise ParseError("ball file needs a 'ball' list", 1, 1)
    half = [_point(text, v, "ball") for v in data["ball"]]
    try:
        return ball_from_half(half)
    except BallError as e:
        line, col = _locate(text, '"ball"')
        raise ParseError(f"{type(e).__name__}: {e}", line, col) from None


def gen_instance(seed: int, n: int, preset: str = "square", bbox: int = 20,
                 half=None, name: str | None = None) -> InstanceFile:
    """Seeded instance with ``n`` distinct lattice terminals in [0, bbox]^2."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if half is None:
        half = preset_half(preset)
    ball = ball_from_half(half)
    if (bbox + 1) ** 2 < n:
        raise ValueError("bounding box too small for n distinct terminals")
    rng = random.Random(seed)
    seen: dict = {}
    while len(seen) < n:
        p = (rng.randint(0, bbox), rng.randint(0, bbox))
        seen.setdefault(p, None)
    return make_instance(name or f"{preset}-n{n}-s{seed}", ball, list(seen))


def load_instance(path):
    with open(path, encoding="utf-8") as fh:
        return parse_instance(fh.read())


# ------------------------------------------------------------------ networks

def network_to_dict(net: Network) -> dict:
    return {
        "segments": [{"a": [rat_str(a.x), rat_str(a.y)], "b": [rat_str(b.x), rat_str(b.y)],
                      "dir": j} for a, b, j in net.merged_segments()],
        "length": rat_str(net.length()),
    }


def network_from_dict(ball: UnitBall, data: dict, terminals=()) -> Network:
    net = Network(ball, terminals=terminals)
    for s in data.get("segments", []):
        a = Point(parse_rat(s["a"][0]), parse_rat(s["a"][1]))
        b = Point(parse_rat(s["b"][0]), parse_rat(s["b"][1]))
        seg = LegalSegment(a, b, int(s["dir"])) if "dir" in s else None
        net.add(seg if seg is not None else (a, b))
    return net


def parse_network(ball: UnitBall, text: str, terminals=()) -> Network:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, e.lineno, e.colno) from None
    try:
        return network_from_dict(ball, data, terminals)
    except (KeyError, ValueError, TypeError) as e:
        raise ParseError(f"bad network: {e}") from None


def report_to_dict(report, oracle=None) -> dict:
    out = {
        "total_length": rat_str(report.total_length),
        "lower_bound": rat_str(report.lower_bound),
        "feasible": report.feasible,
        "elapsed_s": report.elapsed,
        "n_terminals": report.n_terminals,
        "per_direction": [
            {
                "k": d.k,
                "length": rat_str(d.length),
                "lambda_h": rat_str(d.lambda_h),
                "lambda_v": rat_str(d.lambda_v),
                "side_totals": {t: rat_str(v) for t, v in d.totals.items()},
                "chosen": d.chosen,
                "repairs": d.repairs,
                "oracle_opt": None if d.oracle_opt is None else rat_str(d.oracle_opt),
            }
            for d in report.per_direction
        ],
    }
    return out
