"""Optimal completion of a side network and the one-direction solver.

The procedure is written once, for the lower sides of the horizontal strips, and the
other three side networks are obtained by running it on a reflected or rotated grid.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .decomposition import Decomposition, Staircase, Strip, decompose, rightmost_staircases
from .grid import H, V, Grid, enumerate_strip_paths, h_edges, v_edges

TAGS = ("H1", "H2", "V1", "V2")
_TRANSFORM = {"H1": "id", "H2": "rot", "V2": "swap", "V1": "swaprot"}


def side_network(g: Grid, strips: list[Strip], tag: str = "H1") -> set:
    """Edges of one side network: lower/upper sides of horizontal 1-strips (H1/H2) or
    right/left sides of vertical 1-strips (V1/V2); degenerate strips go to both tags
    of their family."""
    family = "h" if tag[0] == "H" else "v"
    which = {"H1": 0, "H2": 1, "V1": 1, "V2": 0}[tag]
    out = set()
    for s in strips:
        if s.family != family:
            continue
        (c0, r0), (c1, r1) = s.sides()[0 if s.degenerate else which]
        out.update(h_edges(r0, c0, c1) if r0 == r1 else v_edges(c0, r0, r1))
    return out


def side_networks(g: Grid, strips: list[Strip]) -> dict:
    return {tag: side_network(g, strips, tag) for tag in TAGS}


class StaircaseDP:
    """Minimum-length connection of an ordered staircase to its wall and floor.

    Terminals are given in canonical order (``sign * x`` increasing).  Each terminal
    leaves either horizontally towards the wall or vertically towards the floor.
    The wall of a subrange is the original wall when it starts at the first terminal,
    otherwise the vertical drop of the terminal just before it; the floor is the
    original floor when the subrange ends at the last terminal, otherwise the
    horizontal of the terminal just after it.  Hence a subproblem is a pair (lo, hi).
    """

    def __init__(self, g: Grid, pts, sign, wall, floor, base, cache=None, clear=None):
        self.g = g
        self.pts = pts
        self.s = sign
        self.wall = wall  # row -> column of the original wall, or None
        self.floor = floor  # (row, cmin, cmax) of the original floor
        self.base = base
        self.memo: dict = {}
        self.cache = cache  # shared across walls for wall-independent states
        self.clear = clear or [False] * len(pts)
        self._seg_cost: dict = {}

    def _cost(self, edges):
        key = edges
        c = self._seg_cost.get(key)
        if c is None:
            c = sum((self.g.edge_length(e) for e in edges if e not in self.base), Fraction(0))
            self._seg_cost[key] = c
        return c

    def left(self, i, lo):
        """Edges for terminal ``i`` going horizontally to the wall of subrange ``lo..``."""
        x, y = self.pts[i]
        w = self.wall(y) if lo == 0 else self.pts[lo - 1][0]
        if w is None or self.s * w > self.s * x:
            return None
        return tuple(h_edges(y, w, x))

    def down(self, i, hi):
        x, y = self.pts[i]
        if hi == len(self.pts) - 1:
            f, cmin, cmax = self.floor
            if not cmin <= x <= cmax:
                return None
        else:
            f = self.pts[hi + 1][1]
        if self.s * f > self.s * y:
            return None
        return tuple(v_edges(x, f, y))

    def solve(self, lo=0, hi=None):
        if hi is None:
            hi = len(self.pts) - 1
        if lo > hi:
            return Fraction(0), ()
        key = (lo, hi)
        if key in self.memo:
            return self.memo[key]
        shared = self.cache is not None and lo > 0 and all(self.clear[lo - 1:hi + 1])
        if shared and key in self.cache:
            self.memo[key] = self.cache[key]
            return self.memo[key]
        best = None
        # split l: terminal l goes to the wall, l + 1 to the floor.  l = lo - 1 is the
        # case where the first terminal drops, l = hi the case where the last goes left.
        order = [lo - 1] + list(range(lo, hi)) + [hi]
        for l in order:
            cost, segs = Fraction(0), []
            ok = True
            if l >= lo:
                e = self.left(l, lo)
                if e is None:
                    continue
                cost += self._cost(e)
                segs.append(e)
            if l + 1 <= hi:
                e = self.down(l + 1, hi)
                if e is None:
                    continue
                cost += self._cost(e)
                segs.append(e)
            if best is not None and cost >= best[0]:
                continue
            c1, s1 = self.solve(lo, l - 1)
            c2, s2 = self.solve(l + 2, hi)
            if c1 is None or c2 is None:
                ok = False
            if ok:
                total = cost + c1 + c2
                if best is None or total < best[0]:
                    best = (total, tuple(segs) + s1 + s2)
        res = best if best is not None else (None, ())
        self.memo[key] = res
        if shared:
            self.cache[key] = res
        return res


def staircase_dp(g: Grid, st: Staircase, pi, shelf_row: int, terms, base=frozenset(),
                 cache=None):
    """Cheapest edges connecting ``terms`` of staircase ``st`` given the vertical-strip
    path ``pi`` and the lower side of the horizontal base at ``shelf_row``.

    Returns ``(cost, edges)``; cost is None if some terminal cannot be connected.
    """
    v, h = st.crossing.vertical, st.crossing.horizontal
    vx0, vy0, vx1, vy1 = v.rect
    hx0, _, hx1, _ = h.rect
    sr = pi.switch
    if st.orientation == "o":
        sign = 1

        def wall(row):
            if sr is None:
                return vx1 if vy0 <= row <= vy1 else None
            if sr <= row <= vy1:
                return vx1
            if vy0 <= row < sr:
                return vx0
            return None

        floor = (shelf_row, hx0, hx1)
        pts = sorted((g.cells[t] for t in terms), key=lambda c: c[0])
        clear = [c[0] > vx1 for c in pts]
    else:
        sign = -1

        def wall(row):
            if sr is None:
                return vx0 if vy0 <= row <= vy1 else None
            if vy0 <= row <= sr:
                return vx0
            if sr < row <= vy1:
                return vx1
            return None

        floor = (shelf_row, hx0, vx0)
        pts = sorted((g.cells[t] for t in terms), key=lambda c: -c[0])
        clear = [c[0] < vx0 for c in pts]
    dp = StaircaseDP(g, pts, sign, wall, floor, base, cache, clear)
    cost, segs = dp.solve()
    edges = set()
    for s in segs:
        edges.update(s)
    return cost, edges


@dataclass
class Completion:
    tag: str
    edges: set  # in the grid of the direction (untransformed)
    added: set
    total: Fraction
    lam: Fraction  # length of the side network
    repairs: int = 0
    switches: dict = field(default_factory=dict)


def monotone_reach(edges, start):
    """Grid vertices reachable from ``start`` moving only right/up along ``edges``."""
    seen = {start}
    stack = [start]
    while stack:
        x, y = stack.pop()
        for nxt, e in (((x + 1, y), (H, x, y)), ((x, y + 1), (V, x, y))):
            if e in edges and nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return seen


def missing_pairs(g: Grid, edges, pairs) -> list:
    by_src: dict = {}
    for i, j in pairs:
        a, b = g.cells[i], g.cells[j]
        if not (a[0] <= b[0] and a[1] <= b[1]):
            a, b = b, a
        by_src.setdefault(a, []).append((i, j, b))
    out = []
    for a in sorted(by_src):
        reach = monotone_reach(edges, a)
        out.extend((i, j) for i, j, b in by_src[a] if b not in reach)
    return sorted(out)


def cheapest_monotone_path(g: Grid, edges, a, b):
    """Monotone grid path from ``a`` to ``b`` minimising length outside ``edges``."""
    (x0, y0), (x1, y1) = a, b
    cost = {}
    prev = {}
    for x in range(x0, x1 + 1):
        for y in range(y0, y1 + 1):
            if (x, y) == a:
                cost[a] = Fraction(0)
                continue
            best = None
            if x > x0:
                e = (H, x - 1, y)
                c = cost[(x - 1, y)] + (0 if e in edges else g.edge_length(e))
                best = (c, (x - 1, y), e)
            if y > y0:
                e = (V, x, y - 1)
                c = cost[(x, y - 1)] + (0 if e in edges else g.edge_length(e))
                if best is None or c < best[0]:
                    best = (c, (x, y - 1), e)
            cost[(x, y)] = best[0]
            prev[(x, y)] = (best[1], best[2])
    path = []
    cur = b
    while cur != a:
        cur, e = prev[cur]
        path.append(e)
    return cost[b], path


def repair(g: Grid, edges: set, pairs) -> int:
    """Add cheapest monotone paths for pairs still unserved; returns how many were added."""
    n = 0
    while True:
        miss = missing_pairs(g, edges, pairs)
        if not miss:
            return n
        i, j = miss[0]
        a, b = g.cells[i], g.cells[j]
        if not (a[0] <= b[0] and a[1] <= b[1]):
            a, b = b, a
        _, path = cheapest_monotone_path(g, edges, a, b)
        edges.update(path)
        n += 1


def complete_lower(g: Grid, dec: Decomposition | None = None, fast_dp: bool = False):
    """Completion of the lower sides of the horizontal 1-strips (the H1 network).

    Returns ``(edges, info)`` in the coordinates of ``g``.
    """
    dec = dec or decompose(g)
    strips = dec.strips
    side = side_network(g, strips, "H1")
    net = set(side)
    rightmost = rightmost_staircases(g, dec.staircases)
    by_vertical: dict = {}
    for st in dec.staircases:
        by_vertical.setdefault(st.crossing.vertical, []).append(st)
    crossed = {c.horizontal for c in dec.crossings}
    chosen = {}
    for v in (s for s in strips if s.family == "v"):
        stairs = by_vertical.get(v, [])
        jobs = []
        for st in stairs:
            h = st.crossing.horizontal
            terms = list(st.terms)
            if st.orientation == "o" and rightmost.get(h) is st and h.hi not in terms:
                terms.append(h.hi)
            jobs.append((st, terms, h.rect[1]))
        caches = [({} if fast_dp else None) for _ in jobs]
        best = None
        for pi in enumerate_strip_paths(g, v):
            base = side | pi.edges
            added = set(pi.edges) - side
            feasible = True
            for (st, terms, shelf), cache in zip(jobs, caches):
                if not terms:
                    continue
                cost, edges = staircase_dp(g, st, pi, shelf, terms, base, cache)
                if cost is None:
                    feasible = False
                    edges = set()
                added |= edges - base
            total = g.length(added)
            key = (not feasible, total)
            if best is None or key < best[0]:
                best = (key, pi, added)
        chosen[v] = best[1].switch
        net |= best[2]
    for h in strips:
        if h.family == "h" and not h.degenerate and h not in crossed:
            x0, y0, x1, y1 = h.rect
            net.update(v_edges(x1, y0, y1))
    return net, {"side": side, "switches": chosen}


def complete(g: Grid, tag: str, fast_dp: bool = False, pairs=None) -> Completion:
    """Optimal completion of side network ``tag`` of grid ``g``, repaired if needed."""
    tg, back = g.transformed(_TRANSFORM[tag])
    dec = decompose(tg)
    edges_t, info = complete_lower(tg, dec, fast_dp)
    edges = {back(e) for e in edges_t}
    side = {back(e) for e in info["side"]}
    if pairs is None:
        from .decomposition import pairs_in_direction
        pairs = pairs_in_direction(g)
    repairs = repair(g, edges, pairs)
    return Completion(tag, edges, edges - side, g.length(edges), g.length(side), repairs,
                      info["switches"])


@dataclass
class DirectionResult:
    k: int
    edges: set
    length: Fraction
    lambda_h: Fraction
    lambda_v: Fraction
    totals: dict
    chosen: str
    repairs: dict


def solve_direction(g: Grid, k: int = 0, fast_dp: bool = False) -> DirectionResult:
    from .decomposition import pairs_in_direction

    pairs = pairs_in_direction(g)
    comps = {tag: complete(g, tag, fast_dp, pairs) for tag in TAGS}
    best = min(TAGS, key=lambda t: (comps[t].total, TAGS.index(t)))
    return DirectionResult(
        k, comps[best].edges, comps[best].total,
        comps["H1"].lam, comps["V1"].lam,
        {t: c.total for t, c in comps.items()}, best,
        {t: c.repairs for t, c in comps.items()},
    )


def solve_1dmmn(ball, terminals, k: int, fast_dp: bool = False):
    """N_k for terminals ``terminals``: returns ``(segments, DirectionResult, grid)``."""
    from .grid import DirGrid

    g = DirGrid(ball, _dedup(terminals), k)
    res = solve_direction(g, k, fast_dp)
    return g.segments(res.edges), res, g


def _dedup(terminals):
    from .norm import as_point

    return list(dict.fromkeys(as_point(t) for t in terminals))
