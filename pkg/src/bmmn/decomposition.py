"""Strips, crossing configurations and staircases of one direction.

Everything runs on a :class:`~bmmn.grid.Grid` in index coordinates, where a pair of
terminals is in F_k exactly when one dominates the other coordinatewise.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .grid import DirGrid, Grid
from .norm import Interval, UnitBall, interval


@dataclass(frozen=True)
class Strip:
    family: str  # "h" (k-strip) or "v" ((k+1)-strip)
    lo: int  # terminal id of the lower-left end
    hi: int  # terminal id of the upper-right end
    degenerate: bool
    rect: tuple  # (x0, y0, x1, y1) in grid indices

    @property
    def pair(self):
        return (min(self.lo, self.hi), max(self.lo, self.hi))

    def sides(self):
        """The two sides as ((c0, r0), (c1, r1)) grid segments: lower/upper or left/right."""
        x0, y0, x1, y1 = self.rect
        if self.family == "h":
            return ((x0, y0), (x1, y0)), ((x0, y1), (x1, y1))
        return ((x0, y0), (x0, y1)), ((x1, y0), (x1, y1))

    def region(self, g: DirGrid) -> Interval:
        return interval(g.ball, g.terminals[self.lo], g.terminals[self.hi])


@dataclass(frozen=True)
class Crossing:
    vertical: Strip
    horizontal: Strip

    @property
    def cell(self):
        v, h = self.vertical.rect, self.horizontal.rect
        return (v[0], h[1], v[2], h[3])

    @property
    def o(self):
        c = self.cell
        return (c[2], c[3])

    @property
    def o_prime(self):
        c = self.cell
        return (c[0], c[1])


@dataclass
class Staircase:
    crossing: Crossing
    orientation: str  # "o": north-east of o; "o'": south-west of o'
    terms: list = field(default_factory=list)  # terminal ids, by increasing x (decreasing y)

    @property
    def origin(self):
        return self.crossing.o if self.orientation == "o" else self.crossing.o_prime

    @property
    def empty(self):
        return not self.terms

    @property
    def target(self) -> int:
        """Terminal every staircase terminal must reach: t_j' at o, t_j at o'."""
        h = self.crossing.horizontal
        return h.lo if self.orientation == "o" else h.hi

    @property
    def bases(self):
        c = self.crossing
        return c.vertical, c.horizontal


def dominates(a, b) -> bool:
    return a[0] <= b[0] and a[1] <= b[1]


def pairs_in_direction(g: Grid) -> set:
    """All pairs {i, j} of F_k, as sorted tuples."""
    out = set()
    cells = g.cells
    for i in range(len(cells)):
        for j in range(i + 1, len(cells)):
            if dominates(cells[i], cells[j]) or dominates(cells[j], cells[i]):
                out.add((i, j))
    return out


def _family_strips(g: Grid, lines: dict, n_lines: int, family: str, swap: bool):
    """Strips of one family; ``lines`` maps line index -> sorted positions along it."""

    def cell(pos, line):
        return (line, pos) if swap else (pos, line)

    def rect(a, b):
        return (a[0], a[1], b[0], b[1])

    out = []
    for line in range(n_lines):
        ps = lines[line]
        for p0, p1 in zip(ps, ps[1:]):
            a, b = cell(p0, line), cell(p1, line)
            out.append(Strip(family, g.at[a], g.at[b], True, rect(a, b)))
    for line in range(n_lines - 1):
        lower, upper = lines[line], lines[line + 1]
        cand = [(p, p) for p in sorted(set(lower) & set(upper))]
        if lower[-1] < upper[0]:
            cand.append((lower[-1], upper[0]))
        for p0, p1 in cand:
            a, b = cell(p0, line), cell(p1, line + 1)
            out.append(Strip(family, g.at[a], g.at[b], False, rect(a, b)))
    return out


def find_strips(g: Grid) -> list[Strip]:
    """All 1-strips of both families (degenerate ones included)."""
    return (_family_strips(g, g.rows, g.ny, "h", swap=False)
            + _family_strips(g, g.cols, g.nx, "v", swap=True))


def is_strip_brute(g: Grid, i: int, j: int, family: str) -> bool:
    """Definition check by enumeration, used as an independent oracle in tests."""
    a, b = g.cells[i], g.cells[j]
    ax, bx = (0, 1) if family == "h" else (1, 0)  # ax: along-line axis, bx: across
    if a[bx] == b[bx]:
        on = sorted(c[ax] for c in g.cells if c[bx] == a[bx])
        lo, hi = sorted((a[ax], b[ax]))
        return not any(lo < p < hi for p in on)
    lines = sorted({c[bx] for c in g.cells})
    ia, ib = lines.index(a[bx]), lines.index(b[bx])
    if abs(ia - ib) != 1:
        return False
    x0, x1 = sorted((a[ax], b[ax]))
    y0, y1 = sorted((a[bx], b[bx]))
    for line in (y0, y1):
        on = sorted(c[ax] for c in g.cells if c[bx] == line)
        for p0, p1 in zip(on, on[1:]):
            lo, hi = max(p0, x0), min(p1, x1)
            if lo > hi:
                continue
            if lo == hi:
                pt = [0, 0]
                pt[ax], pt[bx] = lo, line
                if tuple(pt) not in (a, b):
                    return False
            else:
                return False
    return True


def find_crossings(strips: list[Strip]) -> list[Crossing]:
    vs = [s for s in strips if s.family == "v"]
    hs = [s for s in strips if s.family == "h"]
    out = []
    for v in vs:
        vx0, vy0, vx1, vy1 = v.rect
        for h in hs:
            hx0, hy0, hx1, hy1 = h.rect
            if v.pair == h.pair:
                continue  # one segment seen by both families
            # two degenerate strips meeting at a common end still form a (point) crossing
            if hx0 <= vx0 and vx1 <= hx1 and vy0 <= hy0 and hy1 <= vy1:
                out.append(Crossing(v, h))
    return out


def _staircase_terms(g: Grid, c: Crossing, orientation: str) -> list[int]:
    v, h = c.vertical, c.horizontal
    if orientation == "o":
        ox, oy = c.o
        excluded = {v.hi, h.hi}
        s = 1
    else:
        ox, oy = c.o_prime
        excluded = {v.lo, h.lo}
        s = -1
    # work in the orientation where the staircase lies north-east of its origin
    pts = [(s * x, s * y, t) for t, (x, y) in enumerate(g.cells)]
    ox, oy = s * ox, s * oy
    outside = sorted(p for p in pts if not (p[0] <= ox and p[1] <= oy))
    terms = []
    best_y = None
    for x, y, t in outside:
        # minimal in T \ SW(o): nothing earlier in (x, y) order lies weakly below-left
        if best_y is None or best_y > y:
            if x >= ox and y >= oy and t not in excluded:
                terms.append(t)
        best_y = y if best_y is None else min(best_y, y)
    terms.sort(key=lambda t: g.cells[t][0])
    return terms


def staircase_terms_brute(g: Grid, c: Crossing, orientation: str) -> list[int]:
    """Literal definition of T_{i,j}, quadratic; used as a test oracle."""
    v, h = c.vertical, c.horizontal
    if orientation == "o":
        o, excluded = c.o, {v.hi, h.hi}
        le = dominates
    else:
        o, excluded = c.o_prime, {v.lo, h.lo}
        le = lambda a, b: dominates(b, a)
    out = []
    for t, p in enumerate(g.cells):
        # T_{i,j} draws from T outside the closed SW(o), so a terminal at o is left out
        if t in excluded or not le(o, p) or le(p, o):
            continue
        bad = any(u != t and le(q, p) and not le(q, o) for u, q in enumerate(g.cells))
        if not bad:
            out.append(t)
    return sorted(out, key=lambda t: g.cells[t][0])


def _meets_at_corner(g: Grid, c: Crossing, orientation: str) -> bool:
    """True if the bases only meet at a shared terminal in this corner of a 2-D cell.

    Such strips touch rather than cross there; the strip paths already run through the
    corner terminal, so the staircase at that corner is left empty.
    """
    x0, y0, x1, y1 = c.cell
    corner = c.o if orientation == "o" else c.o_prime
    return x0 < x1 and y0 < y1 and corner in g.at


def build_staircases(g: Grid, crossings: list[Crossing]) -> list[Staircase]:
    out = []
    for c in crossings:
        for orientation in ("o", "o'"):
            terms = [] if _meets_at_corner(g, c, orientation) else _staircase_terms(g, c, orientation)
            out.append(Staircase(c, orientation, terms))
    return out


def rightmost_staircases(g: Grid, staircases: list[Staircase]) -> dict:
    """For every horizontal base, the north-east staircase whose origin is furthest right.

    Ties on the origin go to the larger origin row, then the lowest terminal id of
    the vertical base.
    """
    best: dict = {}
    for s in staircases:
        if s.orientation != "o":
            continue
        h = s.crossing.horizontal
        ox, oy = s.origin
        key = (ox, oy, -min(s.crossing.vertical.lo, s.crossing.vertical.hi))
        if h not in best or key > best[h][0]:
            best[h] = (key, s)
    return {h: s for h, (_, s) in best.items()}


def generating_set(strips: list[Strip], staircases: list[Staircase]) -> set:
    f = {s.pair for s in strips}
    for st in staircases:
        tgt = st.target
        for t in st.terms:
            f.add((min(t, tgt), max(t, tgt)))
    return f


@dataclass
class Decomposition:
    grid: Grid
    strips: list
    crossings: list
    staircases: list

    @property
    def generating_set(self):
        return generating_set(self.strips, self.staircases)


def decompose(g: Grid) -> Decomposition:
    strips = find_strips(g)
    crossings = find_crossings(strips)
    return Decomposition(g, strips, crossings, build_staircases(g, crossings))
