"""Per-direction grids: lines through the terminals parallel to the two extremal
lines of a direction, worked in integer grid indices.

An edge of a grid is a tuple ``(o, ix, iy)``: ``o == 0`` is the horizontal edge from
vertex ``(ix, iy)`` to ``(ix + 1, iy)``, ``o == 1`` the vertical edge to ``(ix, iy + 1)``.
"Horizontal" means parallel to l_k and "vertical" parallel to l_{k+1}.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .norm import Point, UnitBall, as_point

H, V = 0, 1


class Grid:
    """Terminals snapped to the index lattice of their own coordinate lines."""

    def __init__(self, xs, ys, cells):
        self.xs = list(xs)
        self.ys = list(ys)
        self.cells = list(cells)
        self.nx, self.ny = len(self.xs), len(self.ys)
        rows: dict = {}
        cols: dict = {}
        for t, (ix, iy) in enumerate(self.cells):
            rows.setdefault(iy, []).append(ix)
            cols.setdefault(ix, []).append(iy)
        self.rows = {r: sorted(v) for r, v in rows.items()}
        self.cols = {c: sorted(v) for c, v in cols.items()}
        self.at = {c: t for t, c in enumerate(self.cells)}

    @classmethod
    def from_coords(cls, coords):
        xs = sorted({a for a, _ in coords})
        ys = sorted({b for _, b in coords})
        xi = {x: i for i, x in enumerate(xs)}
        yi = {y: i for i, y in enumerate(ys)}
        return cls(xs, ys, [(xi[a], yi[b]) for a, b in coords])

    def edge_length(self, e) -> Fraction:
        o, ix, iy = e
        if o == H:
            return self.xs[ix + 1] - self.xs[ix]
        return self.ys[iy + 1] - self.ys[iy]

    def length(self, edges: Iterable) -> Fraction:
        return sum((self.edge_length(e) for e in edges), Fraction(0))

    def edges(self):
        out = [(H, ix, iy) for iy in range(self.ny) for ix in range(self.nx - 1)]
        out += [(V, ix, iy) for ix in range(self.nx) for iy in range(self.ny - 1)]
        return out

    def transformed(self, tag: str):
        """Return (grid, edge_back) for one of the symmetries used by the four sides.

        ``"id"`` identity, ``"rot"`` half-turn, ``"swap"`` reflection in the diagonal,
        ``"swaprot"`` both.  ``edge_back`` maps an edge of the new grid to this one.
        """
        g, back = self, (lambda e: e)
        if tag in ("swap", "swaprot"):
            g, back = g._swapped(), _swap_edge
        if tag in ("rot", "swaprot"):
            nx, ny = g.nx, g.ny
            g2 = g._rotated()
            inner = back
            back = lambda e, inner=inner: inner(_rot_edge(e, nx, ny))
            g = g2
        return g, back

    def _swapped(self):
        return Grid(self.ys, self.xs, [(iy, ix) for ix, iy in self.cells])

    def _rotated(self):
        nx, ny = self.nx, self.ny
        return Grid([-x for x in reversed(self.xs)], [-y for y in reversed(self.ys)],
                    [(nx - 1 - ix, ny - 1 - iy) for ix, iy in self.cells])


def _swap_edge(e):
    o, ix, iy = e
    return (1 - o, iy, ix)


def _rot_edge(e, nx, ny):
    o, ix, iy = e
    if o == H:
        return (H, nx - 2 - ix, ny - 1 - iy)
    return (V, nx - 1 - ix, ny - 2 - iy)


def h_edges(row: int, c0: int, c1: int):
    if c0 > c1:
        c0, c1 = c1, c0
    return [(H, c, row) for c in range(c0, c1)]


def v_edges(col: int, r0: int, r1: int):
    if r0 > r1:
        r0, r1 = r1, r0
    return [(V, col, r) for r in range(r0, r1)]


class DirGrid(Grid):
    """The grid of direction ``k``: frame coordinates plus the way back to the plane."""

    def __init__(self, ball: UnitBall, terminals, k: int):
        self.ball = ball
        self.k = k
        self.frame = ball.frame(k)
        self.terminals = [as_point(t) for t in terminals]
        coords = [self.frame.to_frame(t) for t in self.terminals]
        g = Grid.from_coords(coords)
        super().__init__(g.xs, g.ys, g.cells)

    @property
    def lines_k(self):
        """Offsets (beta values) of the lines parallel to l_k."""
        return self.ys

    @property
    def lines_k1(self):
        """Offsets (alpha values) of the lines parallel to l_{k+1}."""
        return self.xs

    def vertex(self, ix: int, iy: int) -> Point:
        return self.frame.to_plane(self.xs[ix], self.ys[iy])

    def vertices(self):
        return [self.vertex(ix, iy) for ix in range(self.nx) for iy in range(self.ny)]

    def edge_dir(self, e) -> int:
        """Direction index in [0, m) of the legal segment carrying edge ``e``."""
        return (self.k + e[0]) % self.ball.m

    def segments(self, edges):
        """Merge grid edges into maximal plane segments ``(a, b, dir)``."""
        es = set(edges)
        out = []
        for e in sorted(es, key=lambda e: (e[0], e[2], e[1]) if e[0] == H else (e[0], e[1], e[2])):
            o, ix, iy = e
            prev = (H, ix - 1, iy) if o == H else (V, ix, iy - 1)
            if prev in es:
                continue
            jx, jy = ix, iy
            while (o, jx, jy) in es:
                if o == H:
                    jx += 1
                else:
                    jy += 1
            out.append((self.vertex(ix, iy), self.vertex(jx, jy), self.edge_dir(e)))
        return out


@dataclass(frozen=True)
class SwitchPath:
    """A shortest path inside a strip that changes line at most once."""

    endpoints: tuple  # (lower-left terminal id, upper-right terminal id)
    switch: int | None  # grid line index where the path crosses over; None if degenerate
    polyline: tuple  # grid vertices (ix, iy)
    edges: frozenset


def build_grid(ball: UnitBall, terminals, k: int) -> DirGrid:
    return DirGrid(ball, terminals, k)


def switch_path(g: Grid, strip, r: int | None) -> SwitchPath:
    (x0, y0, x1, y1) = strip.rect
    if strip.family == "v":
        if r is None:
            poly = ((x0, y0), (x1, y1))
            edges = v_edges(x0, y0, y1) if x0 == x1 else h_edges(y0, x0, x1)
        else:
            poly = ((x0, y0), (x0, r), (x1, r), (x1, y1))
            edges = v_edges(x0, y0, r) + h_edges(r, x0, x1) + v_edges(x1, r, y1)
    else:
        if r is None:
            poly = ((x0, y0), (x1, y1))
            edges = h_edges(y0, x0, x1) if y0 == y1 else v_edges(x0, y0, y1)
        else:
            poly = ((x0, y0), (r, y0), (r, y1), (x1, y1))
            edges = h_edges(y0, x0, r) + v_edges(r, y0, y1) + h_edges(y1, r, x1)
    return SwitchPath((strip.lo, strip.hi), r, tuple(dict.fromkeys(poly)), frozenset(edges))


def enumerate_strip_paths(g: Grid, strip) -> list[SwitchPath]:
    """All single-switch shortest paths of a strip, in increasing order of switch line."""
    (x0, y0, x1, y1) = strip.rect
    if strip.degenerate or x0 == x1 or y0 == y1:
        return [switch_path(g, strip, None)]
    if strip.family == "v":
        return [switch_path(g, strip, r) for r in range(y0, y1 + 1)]
    return [switch_path(g, strip, c) for c in range(x0, x1 + 1)]
