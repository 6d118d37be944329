"""Command-line interface.

Exit codes: 0 on success, 2 for invalid input, 3 when the inputs are valid but
the requested quantity does not exist (e.g. a threshold for a uniform
distribution).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import bayes, coefficient, measures, prior, sweeps
from .distributions import bernoulli, make_distribution, parse_distribution
from .errors import DegenerateMathError, MimError

EXIT_INPUT = 2
EXIT_DEGENERATE = 3


def _emit(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", newline="\n") as fh:
            fh.write(text)


def _emit_report(report: dict, args) -> None:
    _emit(json.dumps(report, indent=2) + "\n", args.out)


def _emit_table(table: sweeps.SweepTable, args) -> None:
    _emit(table.to_json() if args.format == "json" else table.to_csv(), args.out)


def cmd_eval(args) -> None:
    d = parse_distribution(args.dist, args.normalize)
    w = measures.ImportanceCoefficient(args.omega)
    _emit_report({
        "n": d.n,
        "omega": w.value,
        "mim": measures.mim(d, w),
        "shannon": measures.shannon(d),
        "renyi_alpha": args.alpha,
        "renyi": measures.renyi(d, args.alpha),
        "lower_bound": measures.mim_lower_bound(d, w),
        "asymptote": measures.mim_asymptote(d, w),
    }, args)


def cmd_sweep_omega(args) -> None:
    d = parse_distribution(args.dist, args.normalize)
    table = sweeps.sweep_omega(d, sweeps.parse_range(args.range))
    table.meta["range"] = args.range
    _emit_table(table, args)


def cmd_sweep_p(args) -> None:
    table = sweeps.sweep_p(args.omega, sweeps.parse_range(args.range))
    table.meta["range"] = args.range
    _emit_table(table, args)


def cmd_select_omega(args) -> None:
    d = parse_distribution(args.dist, args.normalize)
    if args.rule == "crossing":
        w = coefficient.crossing_coefficient(d, args.search_max)
        report = {"threshold": w, "rule": "crossing", "n": d.n, "search_max": args.search_max}
    elif args.rule == "theorem1":
        report = coefficient.theorem1_threshold(d).as_dict()
    else:
        report = coefficient.theorem3_threshold(d).as_dict()
    _emit_report(report, args)


def cmd_estimate_prior(args) -> None:
    b = prior.PriorBounds(args.lower, args.upper)
    p_hat = prior.estimate_prior(b)
    # point interval: the coefficient is the limit 1/p of the balancing rule
    w = 1.0 / p_hat if b.degenerate else prior.select_omega(b).value
    _emit_report({
        "lower": b.lower,
        "upper": b.upper,
        "omega": w,
        "p_hat": p_hat,
        "residual": prior.balanced_importance_residual(b, w),
    }, args)


def cmd_chernoff(args) -> None:
    h0 = bayes.GaussianHypothesis(args.mu0, args.sigma)
    h1 = bayes.GaussianHypothesis(args.mu1, args.sigma)
    beta = bayes.separation(h0, h1)
    a = bayes.chernoff_alpha(args.omega0, beta)
    _emit_report({
        "omega0": args.omega0,
        "beta": beta,
        "alpha": a.alpha,
        "clamped": a.clamped,
        "bound": bayes.chernoff_bound_gaussian(args.omega0, h0, h1),
        "oracle": bayes.bayes_error_oracle_binary(args.omega0, h0, h1),
    }, args)


def cmd_compare_worstcase(args) -> None:
    table = sweeps.compare_worstcase(
        prior.PriorBounds(args.lower, args.upper),
        bayes.GaussianHypothesis(args.mu0, args.sigma),
        bayes.GaussianHypothesis(args.mu1, args.sigma),
        points=args.points, spacing=args.spacing)
    _emit_table(table, args)


def cmd_fig(args) -> None:
    if args.which == "1a":
        d = bernoulli(0.1)
        table = sweeps.sweep_omega(d, sweeps.make_grid(0.0, 12.0, 0.05))
        table.meta.update(figure="1a", range="0:12:0.05",
                          crossing=repr(coefficient.crossing_coefficient(d, 12.0)))
    elif args.which == "1b":
        grid = sweeps.make_grid(0.01, 0.99, 0.01)
        low, high = sweeps.sweep_p(1.0, grid), sweeps.sweep_p(20.0, grid)
        rows = [(a[0], a[1], a[2], b[1], b[2]) for a, b in zip(low.rows, high.rows)]
        table = sweeps.SweepTable(
            ["p0", "mim_bernoulli_w1", "mim_uniform_w1", "mim_bernoulli_w20", "mim_uniform_w20"],
            rows, {"figure": "1b", "range": "0.01:0.99:0.01", "omegas": "1,20"})
    else:
        d = make_distribution(sweeps.PAPER_FIVE_POINT, normalize=True)
        table = sweeps.sweep_omega(d, sweeps.make_grid(0.0, 60.0, 0.25))
        table.meta.update(figure="3", range="0:60:0.25",
                          marker_theorem1=repr(coefficient.theorem1_threshold(d).threshold))
    _emit_table(table, args)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mim", description="Message importance measure toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, table=False):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        p.add_argument("--out", default=None, help="output path (default: stdout)")
        if table:
            p.add_argument("--format", choices=("csv", "json"), default="csv")
        return p

    def add_dist(p):
        p.add_argument("--dist", required=True, help="comma-separated probabilities")
        p.add_argument("--normalize", action="store_true", help="rescale entries to sum to 1")

    p = add("eval", cmd_eval, "evaluate all measures for one distribution")
    add_dist(p)
    p.add_argument("--omega", type=float, required=True)
    p.add_argument("--alpha", type=float, default=2.0, help="Renyi order")

    p = add("sweep-omega", cmd_sweep_omega, "MIM versus importance coefficient", table=True)
    add_dist(p)
    p.add_argument("--range", required=True, help="start:stop:step")

    p = add("sweep-p", cmd_sweep_p, "binary MIM versus p0", table=True)
    p.add_argument("--omega", type=float, required=True)
    p.add_argument("--range", required=True, help="start:stop:step inside (0, 1)")

    p = add("select-omega", cmd_select_omega, "threshold on the importance coefficient")
    add_dist(p)
    p.add_argument("--rule", choices=("theorem1", "theorem3", "crossing"), default="theorem1")
    p.add_argument("--search-max", type=float, default=100.0)

    p = add("estimate-prior", cmd_estimate_prior, "minority prior from an interval")
    p.add_argument("--lower", type=float, required=True)
    p.add_argument("--upper", type=float, required=True)

    p = add("chernoff", cmd_chernoff, "Gaussian Chernoff bound and exact Bayes error")
    p.add_argument("--omega0", type=float, required=True)
    p.add_argument("--mu0", type=float, default=0.0)
    p.add_argument("--mu1", type=float, required=True)
    p.add_argument("--sigma", type=float, default=1.0)

    p = add("compare-worstcase", cmd_compare_worstcase,
            "worst-case versus MIM prior in threshold design", table=True)
    p.add_argument("--lower", type=float, required=True)
    p.add_argument("--upper", type=float, required=True)
    p.add_argument("--mu0", type=float, default=0.0)
    p.add_argument("--mu1", type=float, required=True)
    p.add_argument("--sigma", type=float, default=1.0)
    p.add_argument("--points", type=int, default=50)
    p.add_argument("--spacing", choices=("geometric", "linear"), default="geometric")

    p = add("fig", cmd_fig, "data for the reference figures", table=True)
    p.add_argument("--which", choices=("1a", "1b", "3"), required=True)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except DegenerateMathError as exc:
        print(f"mim: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except MimError as exc:
        print(f"mim: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return 0


if __name__ == "__main__":
    sys.exit(main())
