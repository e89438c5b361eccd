"""Command-line front end: report on one graph, sweep a parameter grid,
run the randomized suite, or generate random graph files.

Exit codes form a stable scripting contract: 0 means success with no bound
violations, 1 means at least one violated bound (or a failed internal
consistency check), 2 means a usage or I/O error. All numeric output uses
17 significant digits so files round-trip losslessly.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from .graphs import GraphFormatError, parse_graph, random_mixed_graph, serialize_graph
from .harness import (
    BoundReport,
    Status,
    SuiteSummary,
    SweepConfig,
    VerificationError,
    randomized_suite,
    sweep_alpha,
    verify_all,
)
from .matrices import BetaParam, omega_constant

GRID_EPS = 1e-12


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def parse_grid(text: str) -> list[float]:
    """A bare float, or "start:stop:step" inclusive of stop (within rounding).

    A step larger than the range yields the single point at start.
    """
    if ":" not in text:
        return [float(text)]
    parts = text.split(":")
    if len(parts) != 3:
        raise ValueError(f"grid spec must be start:stop:step, got {text!r}")
    start, stop, step = (float(p) for p in parts)
    if step <= 0.0:
        raise ValueError(f"grid step must be positive, got {step}")
    if stop < start:
        raise ValueError(f"grid stop {stop} is below start {start}")
    count = int(math.floor((stop - start) / step + GRID_EPS)) + 1
    return [start + i * step for i in range(count)]


def _bound_label(name: str, j: int | None) -> str:
    return name if j is None else f"{name}_j{j}"


def report_to_dict(report: BoundReport) -> dict:
    stats = report.stats
    bounds = []
    for c in report.checked:
        entry = {
            "name": c.result.name,
            "kind": c.result.kind.value,
            "target": c.result.target.value,
            "bound": c.result.bound_value,
            "actual": c.actual,
            "slack": c.slack,
            "status": c.status.value,
        }
        if c.result.j is not None:
            entry["j"] = c.result.j
        if c.result.note:
            entry["note"] = c.result.note
        bounds.append(entry)
    return {
        "graph": {
            "n": stats.n,
            "m": stats.m,
            "arc_count": stats.arc_count,
            "undirected_count": stats.undirected_count,
            "degrees": list(stats.degrees),
            "max_degree": stats.max_degree,
            "min_degree": stats.min_degree,
            "zagreb": stats.zagreb,
        },
        "alpha": report.alpha,
        "beta": [report.beta[0], report.beta[1]],
        "spectrum": list(report.spectrum.values),
        "rho": report.rho,
        "spread": report.spread,
        "trace_norm": report.trace_norm,
        "bounds": bounds,
    }


def summary_to_dict(summary: SuiteSummary) -> dict:
    return {
        "trials": summary.trials,
        "seed": summary.seed,
        "n_range": list(summary.n_range),
        "edge_prob_range": list(summary.edge_prob_range),
        "status_counts": {k: v for k, v in summary.status_counts},
        "worst_slack": {k: v for k, v in summary.worst_slack},
        "min_rho_ratio_omega": summary.min_rho_ratio_omega,
        "min_rho_ratio_general": summary.min_rho_ratio_general,
        "violations": [
            {
                "trial": v.trial,
                "seed": v.seed,
                "graph": v.graph_text,
                "alpha": v.alpha,
                "beta": [v.beta[0], v.beta[1]],
                "bound_name": v.bound_name,
                "j": v.j,
                "bound": v.bound_value,
                "actual": v.actual,
                "slack": v.slack,
            }
            for v in summary.violations
        ],
    }


def dump_json(d: dict) -> str:
    return json.dumps(d, indent=2) + "\n"


def csv_header(report: BoundReport) -> str:
    cols = ["alpha", "beta_arg", "mu1", "muN", "rho", "spread", "traceNorm"]
    for c in report.checked:
        label = _bound_label(c.result.name, c.result.j)
        cols.append(f"{label}_bound")
        cols.append(f"{label}_slack")
    return ",".join(cols)


def csv_row(report: BoundReport, beta_arg: float) -> str:
    cells = [
        _fmt(report.alpha),
        _fmt(beta_arg),
        _fmt(report.spectrum.mu_max),
        _fmt(report.spectrum.mu_min),
        _fmt(report.rho),
        _fmt(report.spread),
        _fmt(report.trace_norm),
    ]
    for c in report.checked:
        cells.append("" if c.result.bound_value is None else _fmt(c.result.bound_value))
        cells.append("" if c.slack is None else _fmt(c.slack))
    return ",".join(cells)


def _read_graph(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph(fh.read())


def _beta_from_arg(beta_arg: float | None) -> tuple[BetaParam, float]:
    if beta_arg is None:
        return omega_constant(), math.pi / 3
    return BetaParam.from_angle(beta_arg), beta_arg


def _exit_code(reports: list[BoundReport]) -> int:
    return 1 if any(r.violated for r in reports) else 0


def cmd_report(args) -> int:
    graph = _read_graph(args.graph)
    alphas = parse_grid(args.alpha)
    if len(alphas) != 1:
        print("report takes a single alpha; use sweep for grids", file=sys.stderr)
        return 2
    beta, beta_arg = _beta_from_arg(args.beta_arg)
    report = verify_all(graph, alphas[0], beta)
    if args.format == "json":
        sys.stdout.write(dump_json(report_to_dict(report)))
    else:
        sys.stdout.write(csv_header(report) + "\n")
        sys.stdout.write(csv_row(report, beta_arg) + "\n")
    return _exit_code([report])


def cmd_sweep(args) -> int:
    graph = _read_graph(args.graph)
    alphas = parse_grid(args.alpha)
    beta, beta_arg = _beta_from_arg(args.beta_arg)
    cfg = SweepConfig(alpha_grid=tuple(alphas), beta_args=(beta.angle,), seed=args.seed)
    reports = sweep_alpha(graph, cfg)
    if args.format == "json":
        sys.stdout.write(dump_json([report_to_dict(r) for r in reports]))
    else:
        sys.stdout.write(csv_header(reports[0]) + "\n")
        for r in reports:
            sys.stdout.write(csv_row(r, beta_arg) + "\n")
    return _exit_code(reports)


def cmd_check(args) -> int:
    cfg = SweepConfig(
        seed=args.seed,
        trials=args.trials,
        n_range=(args.min_n, args.max_n),
    )
    summary = randomized_suite(cfg)
    sys.stdout.write(dump_json(summary_to_dict(summary)))
    corrected = [v for v in summary.violations if not v.bound_name.startswith("unit_offdiag_")]
    return 1 if corrected else 0


def cmd_random(args) -> int:
    graph = random_mixed_graph(args.n, args.edge_prob, args.orient_prob, args.seed)
    sys.stdout.write(serialize_graph(graph))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mixedspec",
        description="Spectra and bound verification for blend matrices of mixed graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    rep = sub.add_parser("report", help="verify one graph at one (alpha, beta)")
    rep.add_argument("--graph", required=True, help="graph file path")
    rep.add_argument("--alpha", default="0", help="blend weight in [0, 1]")
    rep.add_argument("--beta-arg", type=float, default=None, help="angle of beta (default pi/3)")
    rep.add_argument("--format", choices=("json", "csv"), default="json")
    rep.set_defaults(func=cmd_report)

    sw = sub.add_parser("sweep", help="verify one graph over an alpha grid")
    sw.add_argument("--graph", required=True, help="graph file path")
    sw.add_argument("--alpha", default="0:1:0.25", help="alpha value or start:stop:step grid")
    sw.add_argument("--beta-arg", type=float, default=None, help="angle of beta (default pi/3)")
    sw.add_argument("--format", choices=("csv", "json"), default="csv")
    sw.add_argument("--seed", type=int, default=0, help="numerical-range sampling seed")
    sw.set_defaults(func=cmd_sweep)

    chk = sub.add_parser("check", help="run the randomized verification suite")
    chk.add_argument("--trials", type=int, default=1000)
    chk.add_argument("--min-n", type=int, default=2)
    chk.add_argument("--max-n", type=int, default=12)
    chk.add_argument("--seed", type=int, default=0)
    chk.set_defaults(func=cmd_check)

    rnd = sub.add_parser("random", help="emit a random graph file")
    rnd.add_argument("--n", type=int, required=True)
    rnd.add_argument("--edge-prob", type=float, default=0.3)
    rnd.add_argument("--orient-prob", type=float, default=0.5)
    rnd.add_argument("--seed", type=int, default=0)
    rnd.set_defaults(func=cmd_random)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (OSError, GraphFormatError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except VerificationError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
