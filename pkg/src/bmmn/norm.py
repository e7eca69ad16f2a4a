"""Exact geometry of a normed plane whose unit ball is a centrally symmetric polygon.

All scalars are :class:`fractions.Fraction`; nothing in here touches floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

Rat = Fraction


class Point:
    __slots__ = ("x", "y")

    def __init__(self, x, y):
        self.x = x if type(x) is Fraction else Fraction(x)
        self.y = y if type(y) is Fraction else Fraction(y)

    def __add__(self, other):
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other):
        return Point(self.x - other.x, self.y - other.y)

    def __neg__(self):
        return Point(-self.x, -self.y)

    def __mul__(self, s):
        return Point(self.x * s, self.y * s)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, Point) and self.x == other.x and self.y == other.y

    def __hash__(self):
        return hash((self.x, self.y))

    def __iter__(self):
        yield self.x
        yield self.y

    def __bool__(self):
        return bool(self.x) or bool(self.y)

    def __lt__(self, other):
        return (self.x, self.y) < (other.x, other.y)

    def __repr__(self):
        return f"Point({self.x}, {self.y})"

    def cross(self, other):
        return self.x * other.y - self.y * other.x

    def dot(self, other):
        return self.x * other.x + self.y * other.y


def as_point(p) -> Point:
    return p if isinstance(p, Point) else Point(*p)


class BallError(ValueError):
    pass


class NotSymmetric(BallError):
    pass


class NotConvex(BallError):
    pass


class NotCounterclockwise(BallError):
    pass


class OriginOutside(BallError):
    pass


class ZeroVector(ValueError):
    pass


class CoincidentPoints(ValueError):
    pass


class IllegalEdge(ValueError):
    pass


class ConeIndex(NamedTuple):
    k: int


class OnExtremalLine(NamedTuple):
    j: int


@dataclass(frozen=True)
class UnitBall:
    """Validated zonotope; build it with :func:`validate_ball`."""

    vertices: tuple
    m: int

    def b(self, j: int) -> Point:
        return self.vertices[j % (2 * self.m)]

    def frame(self, k: int) -> "Frame":
        return _frame(self, k % (2 * self.m))


def validate_ball(vertices: Sequence) -> UnitBall:
    pts = [as_point(v) for v in vertices]
    n = len(pts)
    if n < 4 or n % 2:
        raise BallError(f"need an even number (>= 4) of vertices, got {n}")
    m = n // 2
    for k in range(m):
        if pts[k + m] != -pts[k]:
            raise NotSymmetric(f"b_{k + m} != -b_{k}")
    turns = []
    for i in range(n):
        a, b, c = pts[i - 1], pts[i], pts[(i + 1) % n]
        turns.append((b - a).cross(c - b))
    if all(t < 0 for t in turns):
        raise NotCounterclockwise("vertices are in clockwise order")
    for i, t in enumerate(turns):
        if t <= 0:
            raise NotConvex(f"vertex {i} breaks strict convexity")
    for k in range(1, m):
        # the first half must sweep exactly a half-turn from b_0
        if pts[0].cross(pts[k]) <= 0:
            raise NotConvex(f"vertex {k} winds past -b_0")
    for i in range(n):
        if pts[i].cross(pts[(i + 1) % n]) <= 0:
            raise OriginOutside(f"origin not strictly left of side {i}")
    return UnitBall(tuple(pts), m)


def cone_of(ball: UnitBall, v) -> ConeIndex | OnExtremalLine:
    v = as_point(v)
    if not v:
        raise ZeroVector("cone of the zero vector is undefined")
    n = 2 * ball.m
    for j in range(n):
        bj = ball.vertices[j]
        if bj.cross(v) == 0 and bj.dot(v) > 0:
            return OnExtremalLine(j)
    for k in range(n):
        if ball.vertices[k].cross(v) > 0 and v.cross(ball.vertices[(k + 1) % n]) > 0:
            return ConeIndex(k)
    raise AssertionError("cones of a valid ball cover the plane")


def cone_coords(ball: UnitBall, k: int, v) -> tuple[Fraction, Fraction]:
    """Coefficients (alpha, beta) with v = alpha*b_k + beta*b_{k+1}."""
    v = as_point(v)
    bk, bk1 = ball.b(k), ball.b(k + 1)
    det = bk.cross(bk1)
    return v.cross(bk1) / det, bk.cross(v) / det


def norm(ball: UnitBall, v) -> Fraction:
    v = as_point(v)
    if not v:
        return Fraction(0)
    c = cone_of(ball, v)
    if isinstance(c, OnExtremalLine):
        b = ball.vertices[c.j]
        return v.x / b.x if b.x else v.y / b.y
    a, b = cone_coords(ball, c.k, v)
    return a + b


def distance(ball: UnitBall, p, q) -> Fraction:
    return norm(ball, as_point(q) - as_point(p))


@dataclass(frozen=True)
class Interval:
    p: Point
    q: Point
    kind: str  # "segment" or "parallelogram"
    cone: int | None = None
    corners: tuple = ()


def interval(ball: UnitBall, p, q) -> Interval:
    p, q = as_point(p), as_point(q)
    if p == q:
        return Interval(p, q, "segment")
    c = cone_of(ball, q - p)
    if isinstance(c, OnExtremalLine):
        return Interval(p, q, "segment")
    a, b = cone_coords(ball, c.k, q - p)
    corners = (p, p + ball.b(c.k) * a, q, p + ball.b(c.k + 1) * b)
    return Interval(p, q, "parallelogram", c.k, corners)


def on_segment(p: Point, q: Point, z: Point) -> bool:
    if (q - p).cross(z - p) != 0:
        return False
    return min(p.x, q.x) <= z.x <= max(p.x, q.x) and min(p.y, q.y) <= z.y <= max(p.y, q.y)


def in_interval(ball: UnitBall, p, q, z) -> bool:
    iv = interval(ball, p, q)
    z = as_point(z)
    if iv.kind == "segment":
        return on_segment(iv.p, iv.q, z)
    a, b = cone_coords(ball, iv.cone, iv.q - iv.p)
    za, zb = cone_coords(ball, iv.cone, z - iv.p)
    return 0 <= za <= a and 0 <= zb <= b


def classify_pair(ball: UnitBall, p, q) -> set[int]:
    p, q = as_point(p), as_point(q)
    if p == q:
        raise CoincidentPoints(f"{p} == {q}")
    m = ball.m
    c = cone_of(ball, q - p)
    if isinstance(c, OnExtremalLine):
        return {c.j % m, (c.j - 1) % m}
    return {c.k % m}


def segment_direction(ball: UnitBall, a, b) -> int | None:
    """Index j in [0, m) with b - a parallel to b_j, or None if the segment is not legal."""
    d = as_point(b) - as_point(a)
    for j in range(ball.m):
        if ball.vertices[j].cross(d) == 0:
            return j
    return None


@dataclass(frozen=True)
class LegalSegment:
    a: Point
    b: Point
    dir: int


def legal_segment(ball: UnitBall, a, b) -> LegalSegment:
    a, b = as_point(a), as_point(b)
    if a == b:
        raise IllegalEdge("zero-length segment")
    j = segment_direction(ball, a, b)
    if j is None:
        raise IllegalEdge(f"{a}-{b} is not parallel to any extremal line")
    return LegalSegment(a, b, j)


def path_length(ball: UnitBall, path) -> Fraction:
    pts = [as_point(p) for p in path]
    return sum((distance(ball, u, v) for u, v in zip(pts, pts[1:])), Fraction(0))


def is_monotone_path(ball: UnitBall, path) -> bool:
    """Monotonicity test: every edge is a k- or (k+1)-segment for the endpoints' cone and
    both oblique coordinates are non-decreasing along the path."""
    pts = [as_point(p) for p in path]
    for u, v in zip(pts, pts[1:]):
        if u == v or segment_direction(ball, u, v) is None:
            raise IllegalEdge(f"{u}-{v} is not a legal segment")
    p, q = pts[0], pts[-1]
    if p == q:
        return len(pts) == 1
    c = cone_of(ball, q - p)
    if isinstance(c, OnExtremalLine):
        d = q - p
        # every vertex on pq, strictly advancing
        ts = [(z - p).dot(d) for z in pts]
        return all(on_segment(p, q, z) for z in pts) and all(s < t for s, t in zip(ts, ts[1:]))
    k = c.k
    coords = [cone_coords(ball, k, z - p) for z in pts]
    for (a0, b0), (a1, b1) in zip(coords, coords[1:]):
        if a0 != a1 and b0 != b1:
            return False  # not a k- or (k+1)-segment
        if a1 < a0 or b1 < b0:
            return False
    return True


def is_shortest_legal_path(ball: UnitBall, path) -> bool:
    pts = [as_point(p) for p in path]
    verdict = is_monotone_path(ball, pts)
    exact = path_length(ball, pts) == distance(ball, pts[0], pts[-1])
    if verdict != exact:
        raise AssertionError(f"monotonicity and length disagree on {pts}")
    return verdict


class Frame:
    """Oblique coordinates (alpha, beta) in the basis (b_k, b_{k+1}).

    In this frame the k-segments are horizontal, the (k+1)-segments vertical, and
    the length of either kind of segment is the coordinate difference.
    """

    def __init__(self, ball: UnitBall, k: int):
        self.k = k
        self.u = ball.b(k)
        self.w = ball.b(k + 1)
        self.det = self.u.cross(self.w)

    def to_frame(self, p: Point) -> tuple[Fraction, Fraction]:
        return p.cross(self.w) / self.det, self.u.cross(p) / self.det

    def to_plane(self, a, b) -> Point:
        return Point(a * self.u.x + b * self.w.x, a * self.u.y + b * self.w.y)


_FRAMES: dict = {}


def _frame(ball: UnitBall, k: int) -> Frame:
    key = (ball, k)
    f = _FRAMES.get(key)
    if f is None:
        f = _FRAMES[key] = Frame(ball, k)
    return f
