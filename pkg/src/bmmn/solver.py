"""Assembly over all directions, the lower bound, the exact per-direction oracle and
ratio reporting."""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .completion import H, V, cheapest_monotone_path, missing_pairs, solve_direction
from .decomposition import pairs_in_direction
from .grid import DirGrid, Grid, h_edges, v_edges
from .network import Network
from .norm import UnitBall, as_point

DEFAULT_NODE_BUDGET = 10**7
DEFAULT_TIME_BUDGET = 60.0


class InfeasibleOutput(AssertionError):
    """The assembled network misses a shortest path; always a bug."""


class BudgetExceeded(Exception):
    pass


class MissingOracle(ValueError):
    pass


@dataclass
class DirectionStats:
    k: int
    length: Fraction
    lambda_h: Fraction
    lambda_v: Fraction
    totals: dict
    chosen: str
    repairs: int
    oracle_opt: Fraction | None = None


@dataclass
class SolveReport:
    total_length: Fraction
    per_direction: list
    lower_bound: Fraction
    feasible: bool
    elapsed: float
    n_terminals: int = 0
    failures: list = field(default_factory=list)


def dedup(terminals):
    return list(dict.fromkeys(as_point(t) for t in terminals))


def _direction_job(args):
    ball, terminals, k, fast_dp = args
    g = DirGrid(ball, terminals, k)
    res = solve_direction(g, k, fast_dp)
    return g.segments(res.edges), res


def lower_bound(per_direction) -> Fraction:
    """Half the sum over directions of Lambda_h + Lambda_v; never exceeds OPT."""
    return sum((d.lambda_h + d.lambda_v for d in per_direction), Fraction(0)) / 2


def solve_bmmn(ball: UnitBall, terminals, fast_dp: bool = False, verify: bool = True,
               jobs: int = 1):
    """Union of the per-direction networks, with a feasibility check of the union.

    Returns ``(Network, SolveReport)``.  Raises :class:`InfeasibleOutput` if the
    validator rejects the union.
    """
    start = time.perf_counter()
    ts = dedup(terminals)
    args = [(ball, ts, k, fast_dp) for k in range(ball.m)] if len(ts) > 1 else []
    if jobs > 1 and len(args) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            results = list(ex.map(_direction_job, args))
    else:
        results = [_direction_job(a) for a in args]
    net = Network(ball, terminals=ts)
    per = []
    for segs, res in results:
        for a, b, j in segs:
            net.add((a, b))
        per.append(DirectionStats(res.k, res.length, res.lambda_h, res.lambda_v, res.totals,
                                  res.chosen, sum(res.repairs.values())))
    feasible, failures = True, []
    if verify:
        rep = net.verify_manhattan(ts)
        feasible, failures = rep.ok, rep.failures
    report = SolveReport(net.length(), per, lower_bound(per), feasible,
                         time.perf_counter() - start, len(ts), failures)
    if not feasible:
        raise InfeasibleOutput(f"{len(failures)} terminal pairs lack a shortest path")
    return net, report


# ---------------------------------------------------------------- exact oracle

@dataclass
class OracleResult:
    opt: Fraction
    edges: frozenset
    nodes: int


def _monotone_paths(a, b):
    """All monotone grid paths from a to b as tuples of edges."""
    (x0, y0), (x1, y1) = a, b
    out = []

    def rec(x, y, acc):
        if (x, y) == (x1, y1):
            out.append(tuple(acc))
            return
        if x < x1:
            acc.append((H, x, y))
            rec(x + 1, y, acc)
            acc.pop()
        if y < y1:
            acc.append((V, x, y))
            rec(x, y + 1, acc)
            acc.pop()

    rec(x0, y0, [])
    return out


def exact_1dmmn(g: Grid, budget: int = DEFAULT_NODE_BUDGET,
                time_budget: float = DEFAULT_TIME_BUDGET) -> OracleResult:
    """Exact minimum one-direction network on the grid by branch and bound.

    A minimum network contains, for every pair of F_k, one monotone grid path, and the
    union of such a choice of paths is itself feasible; the search branches over
    the path of the currently most expensive unserved pair.
    """
    pairs = sorted(pairs_in_direction(g))
    ends = []
    for i, j in pairs:
        a, b = g.cells[i], g.cells[j]
        if not (a[0] <= b[0] and a[1] <= b[1]):
            a, b = b, a
        ends.append((a, b))
    # the union of all pair rectangles is feasible: an independent upper bound
    upper = set()
    for (x0, y0), (x1, y1) in ends:
        for y in range(y0, y1 + 1):
            upper.update(h_edges(y, x0, x1))
        for x in range(x0, x1 + 1):
            upper.update(v_edges(x, y0, y1))
    best = [g.length(upper), frozenset(upper)]
    paths_cache: dict = {}
    nodes = [0]
    deadline = time.perf_counter() + time_budget

    def rec(edges: frozenset, cost: Fraction):
        nodes[0] += 1
        if nodes[0] > budget or time.perf_counter() > deadline:
            raise BudgetExceeded(f"oracle stopped after {nodes[0]} nodes")
        miss = missing_pairs(g, edges, pairs)
        if not miss:
            if cost < best[0]:
                best[0], best[1] = cost, edges
            return
        lb, pick = Fraction(0), None
        for p in miss:
            a, b = ends[pairs.index(p)]
            extra, _ = cheapest_monotone_path(g, edges, a, b)
            if pick is None or extra > lb:
                lb, pick = extra, (a, b)
        if cost + lb >= best[0]:
            return
        a, b = pick
        if pick not in paths_cache:
            paths_cache[pick] = _monotone_paths(a, b)
        options = {}
        for path in paths_cache[pick]:
            new = frozenset(e for e in path if e not in edges)
            if new not in options:
                options[new] = g.length(new)
        for new, extra in sorted(options.items(), key=lambda kv: (kv[1], sorted(kv[0]))):
            if cost + extra >= best[0]:
                break
            rec(edges | new, cost + extra)

    rec(frozenset(), Fraction(0))
    return OracleResult(best[0], best[1], nodes[0])


def exact_1dmmn_oracle(ball: UnitBall, terminals, k: int,
                       budget: int = DEFAULT_NODE_BUDGET,
                       time_budget: float = DEFAULT_TIME_BUDGET) -> Fraction:
    """OPT_k for the terminals; raises :class:`BudgetExceeded` when out of budget."""
    ts = dedup(terminals)
    if len(ts) < 2:
        return Fraction(0)
    return exact_1dmmn(DirGrid(ball, ts, k), budget, time_budget).opt


def is_locally_minimal(g: Grid, edges) -> bool:
    pairs = pairs_in_direction(g)
    edges = set(edges)
    if missing_pairs(g, edges, pairs):
        return False
    for e in sorted(edges):
        if not missing_pairs(g, edges - {e}, pairs):
            return False
    return True


@dataclass
class RatioReport:
    per_direction: list  # (k, length(N_k) / OPT_k)
    global_ratio: Fraction  # total / (sum OPT_k / 2)
    bound_ok: bool  # total <= 1.25 * sum OPT_k
    ledger_ok: bool  # length(N_k) <= OPT_k + min(Lambda_h, Lambda_v) / 2 for all k


def ratio_report(report: SolveReport, oracle) -> RatioReport:
    """Ratios against per-direction optima ``oracle`` (a dict or list indexed by k)."""
    per = []
    ledger = True
    total_opt = Fraction(0)
    for d in report.per_direction:
        try:
            opt = oracle[d.k]
        except (KeyError, IndexError):
            opt = None
        if opt is None:
            raise MissingOracle(f"no oracle value for direction {d.k}")
        total_opt += opt
        per.append((d.k, d.length / opt if opt else Fraction(1)))
        if d.length > opt + min(d.lambda_h, d.lambda_v) / 2:
            ledger = False
    glob = report.total_length / (total_opt / 2) if total_opt else Fraction(1)
    return RatioReport(per, glob, report.total_length <= Fraction(5, 4) * total_opt, ledger)
