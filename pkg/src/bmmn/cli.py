"""Command line entry point: ``bmmn gen|solve|validate|oracle|render``.

Exit codes: 0 ok, 1 infeasible / invalid input / parse error, 2 oracle budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import io
from .norm import BallError
from .solver import BudgetExceeded, InfeasibleOutput, exact_1dmmn_oracle, solve_bmmn

EXIT_OK, EXIT_FAIL, EXIT_BUDGET = 0, 1, 2


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _emit(text, out):
    if out in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _ball_arg(value):
    """A preset name or a JSON file holding a ``ball`` list (an instance file works)."""
    if value is None:
        return None
    if os.path.exists(value):
        return io.parse_ball(_read(value))
    return io.preset_ball(value)


def _load(args):
    ball, terms, name = io.parse_instance(_read(args.instance))
    override = _ball_arg(args.ball)
    return (override or ball), terms, name


def _network_text(ball, text, terminals):
    data = json.loads(text)
    if isinstance(data, dict) and "network" in data:
        data = data["network"]
    return io.network_from_dict(ball, data, terminals)


def cmd_gen(args):
    preset = args.ball or "square"
    half = None
    if os.path.exists(preset):
        ball = _ball_arg(preset)
        half, preset = list(ball.vertices[:ball.m]), "custom"
    inst = io.gen_instance(args.seed, args.n, preset, bbox=args.bbox, half=half)
    _emit(inst.to_text(), args.out)
    return EXIT_OK


def cmd_solve(args):
    ball, terms, name = _load(args)
    try:
        net, report = solve_bmmn(ball, terms, fast_dp=args.fast_dp, jobs=args.jobs)
    except InfeasibleOutput as e:
        print(f"infeasible output: {e}", file=sys.stderr)
        return EXIT_FAIL
    doc = {"name": name, "network": io.network_to_dict(net), "report": io.report_to_dict(report)}
    _emit(json.dumps(doc, indent=1) + "\n", args.out)
    if args.figure:
        from .plotting import plot_solution
        plot_solution(ball, terms, net, args.figure, title=name or None, report=report)
    return EXIT_OK


def cmd_validate(args):
    ball, terms, _ = _load(args)
    try:
        net = _network_text(ball, _read(args.network), terms)
    except (KeyError, ValueError, TypeError) as e:
        raise io.ParseError(f"bad network: {e}") from None
    rep = net.verify_manhattan(terms)
    out = {
        "feasible": rep.ok,
        "length": io.rat_str(net.length()),
        "failures": [
            {"pair": [i, j], "network_distance": None if got is None else io.rat_str(got),
             "required": io.rat_str(need)}
            for i, j, got, need in rep.failures
        ],
    }
    _emit(json.dumps(out, indent=1) + "\n", args.out)
    if not rep.ok:
        for i, j, got, need in rep.failures:
            print(f"missing shortest path for pair ({i}, {j}): "
                  f"{'unreachable' if got is None else io.rat_str(got)} > {io.rat_str(need)}",
                  file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def cmd_oracle(args):
    ball, terms, _ = _load(args)
    ks = [args.direction % ball.m] if args.direction is not None else range(ball.m)
    out = {}
    for k in ks:
        try:
            opt = exact_1dmmn_oracle(ball, terms, k, budget=args.budget, time_budget=args.time_budget)
        except BudgetExceeded as e:
            print(f"direction {k}: {e}", file=sys.stderr)
            return EXIT_BUDGET
        out[str(k)] = io.rat_str(opt)
    _emit(json.dumps({"opt": out}, indent=1) + "\n", args.out)
    return EXIT_OK


def cmd_render(args):
    from .render import RenderSpec, render_svg

    ball, terms, _ = _load(args)
    net = None
    if args.network:
        net = _network_text(ball, _read(args.network), terms)
    spec = RenderSpec(width=args.size, height=args.size, show_strips=args.strips,
                      show_staircases=args.staircases, direction=args.direction or 0,
                      inset_ball=not args.no_inset)
    _emit(render_svg(ball, terms, net, spec), args.out)
    return EXIT_OK


def build_parser():
    p = argparse.ArgumentParser(prog="bmmn", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--ball", help="ball preset (square, hexagon, octagon-rational, "
                                       "regular-N) or a JSON file with a 'ball' list")
    common.add_argument("--out", "-o", help="output file (default: stdout)")
    sub = p.add_subparsers(dest="cmd", required=True)

    g = sub.add_parser("gen", parents=[common], help="write a seeded random instance")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--n", type=int, default=10)
    g.add_argument("--bbox", type=int, default=20, help="terminals lie on the lattice [0, bbox]^2")
    g.set_defaults(func=cmd_gen)

    s = sub.add_parser("solve", parents=[common], help="solve an instance; emits network and report JSON")
    s.add_argument("instance")
    s.add_argument("--fast-dp", action="store_true", help="reuse staircase DP states across switch paths")
    s.add_argument("--jobs", type=int, default=1, help="worker processes over directions")
    s.add_argument("--figure", help="also save a matplotlib figure (png, pdf, svg ...)")
    s.set_defaults(func=cmd_solve)

    v = sub.add_parser("validate", parents=[common], help="check a network against an instance")
    v.add_argument("instance")
    v.add_argument("network", help="network JSON, or the output of 'solve'")
    v.set_defaults(func=cmd_validate)

    o = sub.add_parser("oracle", parents=[common], help="exact per-direction optimum (small inputs)")
    o.add_argument("instance")
    o.add_argument("--direction", type=int)
    o.add_argument("--budget", type=int, default=10**7, help="branch-and-bound node budget")
    o.add_argument("--time-budget", type=float, default=60.0, help="seconds per direction")
    o.set_defaults(func=cmd_oracle)

    r = sub.add_parser("render", parents=[common], help="draw an instance and optional network as SVG")
    r.add_argument("instance")
    r.add_argument("network", nargs="?")
    r.add_argument("--direction", type=int, help="direction whose strips/staircases are shaded")
    r.add_argument("--strips", action="store_true")
    r.add_argument("--staircases", action="store_true")
    r.add_argument("--no-inset", action="store_true", help="omit the unit ball inset")
    r.add_argument("--size", type=int, default=640)
    r.set_defaults(func=cmd_render)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except io.ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
    except (BallError, KeyError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
    return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
