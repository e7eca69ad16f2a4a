"""Networks of legal segments in the plane: union length, planarization and exact
shortest paths."""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .norm import LegalSegment, Point, UnitBall, as_point, distance, legal_segment


class Unreachable(Exception):
    pass


@dataclass(frozen=True)
class PathResult:
    length: Fraction
    polyline: list


@dataclass
class ManhattanReport:
    ok: bool
    failures: list = field(default_factory=list)  # (i, j, best or None, required)


def _param(d: Point, p: Point) -> Fraction:
    # position along a line of direction d; differences are gauge lengths since ||d|| = 1
    return p.x / d.x if d.x else p.y / d.y


class Network:
    """A finite set of legal segments plus registered terminals.

    The planar graph is derived lazily and dropped whenever segments are added.
    """

    def __init__(self, ball: UnitBall, segments=(), terminals=()):
        self.ball = ball
        self.segments: list[LegalSegment] = []
        self.terminals = [as_point(t) for t in terminals]
        self._lines = None
        self._graph = None
        self._int = None
        for s in segments:
            self.add(s)

    def add(self, seg):
        if not isinstance(seg, LegalSegment):
            a, b = seg[0], seg[1]
            seg = legal_segment(self.ball, a, b)
        self.segments.append(seg)
        self._lines = self._graph = None
        return self

    def register(self, *points):
        self.terminals.extend(as_point(p) for p in points)
        self._graph = None
        return self

    # merged collinear pieces: list of (dir, key, t0, t1)
    def lines(self):
        if self._lines is None:
            groups: dict = {}
            for s in self.segments:
                d = self.ball.vertices[s.dir]
                key = d.cross(s.a)
                t0, t1 = sorted((_param(d, s.a), _param(d, s.b)))
                groups.setdefault((s.dir, key), []).append((t0, t1))
            out = []
            for (j, key), ivs in sorted(groups.items()):
                ivs.sort()
                cur0, cur1 = ivs[0]
                for t0, t1 in ivs[1:]:
                    if t0 <= cur1:
                        cur1 = max(cur1, t1)
                    else:
                        out.append((j, key, cur0, cur1))
                        cur0, cur1 = t0, t1
                out.append((j, key, cur0, cur1))
            self._lines = out
        return self._lines

    def length(self) -> Fraction:
        return sum((t1 - t0 for _, _, t0, t1 in self.lines()), Fraction(0))

    def merged_segments(self):
        return [(self._point(j, key, t0), self._point(j, key, t1), j)
                for j, key, t0, t1 in self.lines()]

    def _point(self, j, key, t) -> Point:
        d = self.ball.vertices[j]
        # cross(d, p) = key and param(d, p) = t
        if d.x:
            x = t * d.x
            return Point(x, (key + d.y * x) / d.x)
        y = t * d.y
        return Point((d.x * y - key) / d.y, y)

    def graph(self):
        """Adjacency {Point: [(Point, Fraction)]} of the planarized network."""
        if self._graph is not None:
            return self._graph
        lines = self.lines()
        ball = self.ball
        stops = [set([t0, t1]) for _, _, t0, t1 in lines]
        if lines:
            pts = [(self._point(j, key, t0), self._point(j, key, t1)) for j, key, t0, t1 in lines]
            lo = np.array([[float(min(a.x, b.x)), float(min(a.y, b.y))] for a, b in pts])
            hi = np.array([[float(max(a.x, b.x)), float(max(a.y, b.y))] for a, b in pts])
            span = float(np.abs(np.concatenate([lo, hi])).max()) + 1.0
            eps = span * 1e-9
            dirs = np.array([j for j, _, _, _ in lines])
            for i, (j, key, t0, t1) in enumerate(lines):
                cand = np.nonzero(
                    (dirs[i + 1:] != j)
                    & (lo[i + 1:, 0] <= hi[i, 0] + eps) & (hi[i + 1:, 0] >= lo[i, 0] - eps)
                    & (lo[i + 1:, 1] <= hi[i, 1] + eps) & (hi[i + 1:, 1] >= lo[i, 1] - eps)
                )[0] + i + 1
                d1 = ball.vertices[j]
                for c in cand.tolist():
                    j2, key2, s0, s1 = lines[c]
                    d2 = ball.vertices[j2]
                    det = d1.cross(d2)
                    # p = a*d1 + b*d2 with cross(d1,p) = b*det = key, cross(d2,p) = -a*det = key2
                    b = key / det
                    a = -key2 / det
                    p = Point(a * d1.x + b * d2.x, a * d1.y + b * d2.y)
                    u, w = _param(d1, p), _param(d2, p)
                    if t0 <= u <= t1 and s0 <= w <= s1:
                        stops[i].add(u)
                        stops[c].add(w)
        for t in self.terminals:
            for i, (j, key, t0, t1) in enumerate(lines):
                d = ball.vertices[j]
                if d.cross(t) == key:
                    u = _param(d, t)
                    if t0 <= u <= t1:
                        stops[i].add(u)
        adj: dict = {t: [] for t in self.terminals}
        for (j, key, _, _), ts in zip(lines, stops):
            ts = sorted(ts)
            ps = [self._point(j, key, t) for t in ts]
            for p in ps:
                adj.setdefault(p, [])
            for (u, p), (w, q) in zip(zip(ts, ps), zip(ts[1:], ps[1:])):
                adj[p].append((q, w - u))
                adj[q].append((p, w - u))
        self._graph = adj
        return adj

    def _indexed(self):
        """Integer form of the graph: (points, index, adjacency, scale), cached with it."""
        if self._int is None or self._int[0] is not self._graph:
            adj = self.graph()
            scale = 1
            for d in {wt.denominator for nbrs in adj.values() for _, wt in nbrs}:
                scale = scale * d // math.gcd(scale, d)
            pts = list(adj)
            index = {p: i for i, p in enumerate(pts)}
            iadj = [[(index[q], int(w * scale)) for q, w in adj[p]] for p in pts]
            self._int = (adj, pts, index, iadj, scale)
        return self._int[1:]

    @staticmethod
    def _run(iadj, src):
        dist = [None] * len(iadj)
        prev = [None] * len(iadj)
        dist[src] = 0
        heap = [(0, src)]
        while heap:
            d, u = heapq.heappop(heap)
            if d > dist[u]:
                continue
            for v, w in iadj[u]:
                nd = d + w
                if dist[v] is None or nd < dist[v]:
                    dist[v] = nd
                    prev[v] = u
                    heapq.heappush(heap, (nd, v))
        return dist, prev

    def dijkstra(self, source: Point):
        """Exact single-source distances; weights are scaled to integers."""
        pts, index, iadj, scale = self._indexed()
        source = as_point(source)
        if source not in index:
            raise Unreachable(f"{source} is not a vertex of the network")
        dist, prev = self._run(iadj, index[source])
        return ({pts[i]: Fraction(d, scale) for i, d in enumerate(dist) if d is not None},
                {pts[v]: pts[u] for v, u in enumerate(prev) if u is not None})

    def shortest_path(self, p, q) -> PathResult:
        p, q = as_point(p), as_point(q)
        adj = self.graph()
        if p not in adj or q not in adj:
            raise Unreachable(f"{p} or {q} is not a vertex of the network")
        dist, prev = self.dijkstra(p)
        if q not in dist:
            raise Unreachable(f"no path from {p} to {q}")
        poly = [q]
        while poly[-1] != p:
            poly.append(prev[poly[-1]])
        return PathResult(dist[q], poly[::-1])

    def verify_manhattan(self, terminals=None) -> ManhattanReport:
        ts = [as_point(t) for t in (terminals if terminals is not None else self.terminals)]
        missing = [t for t in ts if t not in self.terminals]
        if missing:
            self.register(*missing)
        pts, index, iadj, scale = self._indexed()
        failures = []
        for i, p in enumerate(ts):
            dist = self._run(iadj, index[p])[0] if p in index else None
            for j in range(i + 1, len(ts)):
                q = ts[j]
                need = distance(self.ball, p, q)
                got = None
                if dist is not None and q in index and dist[index[q]] is not None:
                    got = Fraction(dist[index[q]], scale)
                if got is None and p == q:
                    got = Fraction(0)
                if got != need:
                    failures.append((i, j, got, need))
        return ManhattanReport(not failures, failures)


def length(net: Network) -> Fraction:
    return net.length()


def shortest_path_in(net: Network, p, q) -> PathResult:
    return net.shortest_path(p, q)


def verify_manhattan(net: Network, terminals) -> ManhattanReport:
    return net.verify_manhattan(terminals)
