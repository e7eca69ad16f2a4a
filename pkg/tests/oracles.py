"""Independent reference computations used only by the tests.

Nothing here calls into the cone machinery of the library: the norm is evaluated
through the facets of the ball, and small one-direction optima by exhaustive subset
search with a plain reachability check.
"""

from fractions import Fraction
from itertools import combinations

from bmmn.norm import Point


def facet_norm(ball, v):
    """max over facets of <n, v>, with n scaled so that <n, b> = 1 on the facet."""
    v = Point(*v) if not isinstance(v, Point) else v
    best = Fraction(0)
    vs = ball.vertices
    for i in range(len(vs)):
        a, b = vs[i], vs[(i + 1) % len(vs)]
        # normal (dy, -dx) of the edge, scaled so <n, a> = 1
        nx, ny = b.y - a.y, a.x - b.x
        s = nx * a.x + ny * a.y
        best = max(best, (nx * v.x + ny * v.y) / s)
    return best


def facet_distance(ball, p, q):
    return facet_norm(ball, Point(q[0] - p[0], q[1] - p[1]))


def grid_reach(edges, start):
    """Vertices reachable from ``start`` by up/right moves over ``edges``."""
    seen = {start}
    stack = [start]
    while stack:
        x, y = stack.pop()
        for e, nxt in (((0, x, y), (x + 1, y)), ((1, x, y), (x, y + 1))):
            if e in edges and nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return seen


def serves_all(g, edges, pairs):
    edges = set(edges)
    for i, j in pairs:
        a, b = g.cells[i], g.cells[j]
        if not (a[0] <= b[0] and a[1] <= b[1]):
            a, b = b, a
        if b not in grid_reach(edges, a):
            return False
    return True


def brute_opt(g, pairs):
    """Minimum length over all subsets of the edges inside the pair rectangles."""
    cand = set()
    for i, j in pairs:
        (x0, y0), (x1, y1) = sorted((g.cells[i], g.cells[j]))
        lo_y, hi_y = min(y0, y1), max(y0, y1)
        for y in range(lo_y, hi_y + 1):
            cand.update((0, x, y) for x in range(x0, x1))
        for x in range(x0, x1 + 1):
            cand.update((1, x, y) for y in range(lo_y, hi_y))
    cand = sorted(cand)
    if len(cand) > 16:
        return None
    best = None
    for r in range(len(cand) + 1):
        for sub in combinations(cand, r):
            cost = g.length(sub)
            if best is not None and cost >= best:
                continue
            if serves_all(g, sub, pairs):
                best = cost
    return best


def _paths(a, b):
    (x0, y0), (x1, y1) = a, b
    if (x0, y0) == (x1, y1):
        return [()]
    out = []
    if x0 < x1:
        out += [((0, x0, y0),) + p for p in _paths((x0 + 1, y0), b)]
    if y0 < y1:
        out += [((1, x0, y0),) + p for p in _paths((x0, y0 + 1), b)]
    return out


def path_product_opt(g, pairs, cap=10**6):
    """Minimum over every choice of one monotone path per pair; None above ``cap`` choices.

    Any feasible network contains such a choice, and the union of a choice is feasible.
    Partial choices already no cheaper than the best full one are cut off.
    """
    options = []
    for i, j in sorted(pairs):
        a, b = sorted((g.cells[i], g.cells[j]))
        options.append(_paths(a, b))
    count = 1
    for o in options:
        count *= len(o)
    if count > cap:
        return None
    w = {e: g.edge_length(e) for o in options for p in o for e in p}
    best = [sum(w.values())]

    def rec(d, edges, cost):
        if cost >= best[0]:
            return
        if d == len(options):
            best[0] = cost
            return
        for p in options[d]:
            new = [e for e in p if e not in edges]
            rec(d + 1, edges | set(new), cost + sum(w[e] for e in new))

    rec(0, frozenset(), 0)
    return best[0]
