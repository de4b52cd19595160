"""Command-line entry point: ``salpha bounds|experiment|curves|spectrum``."""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from salpha.bounds import bound_report
from salpha.experiments import (
    EXPERIMENT_HEADER,
    ExperimentRow,
    curve_samples,
    curves_csv,
    experiment_csv,
    experiment_rows,
    report_text,
    write_csv,
)
from salpha.graph import Graph, parse_edge_list
from salpha.spectral import graph_spectrum

log = logging.getLogger("salpha")


def int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def read_graph(path: str) -> Graph:
    p = Path(path)
    if not p.is_file():
        raise FileNotFoundError(f"file not found: {path}")
    return parse_edge_list(p.read_text())


def write_out(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)
        log.info("wrote %s", out)


def cmd_bounds(args) -> None:
    g = read_graph(args.input)
    report = bound_report(g, args.alpha, bipartite_theta=args.theta == "auto")
    if args.format == "text":
        text = report_text(report)
    else:
        row = ExperimentRow.from_report(report, None, "named")
        text = write_csv(EXPERIMENT_HEADER, [row.csv_fields()])
    sys.stdout.write(text)


def cmd_experiment(args) -> None:
    rows = experiment_rows(args.model, args.sizes, args.alpha, args.seed, args.q,
                           bipartite_theta=args.theta == "auto")
    write_out(experiment_csv(rows), args.out)


def cmd_curves(args) -> None:
    write_out(curves_csv(curve_samples(args.n, args.samples, args.spacing)), args.out)


def cmd_spectrum(args) -> None:
    s = graph_spectrum(read_graph(args.input))
    rows = ([str(i), f"{lam:.17g}"] for i, lam in enumerate(s.values, start=1))
    write_out(write_csv(["index", "lambda"], rows), args.out)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="salpha",
        description="Sums of powers of normalized-Laplacian eigenvalues and their bounds.",
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bounds", help="bound report for one edge-list file")
    p.add_argument("--input", required=True)
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--format", choices=("text", "csv"), default="text")
    p.add_argument("--theta", choices=("auto", "q"), default="auto",
                   help="auto: theta=2 for bipartite graphs, Q otherwise; q: always Q")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("experiment", help="one CSV row per graph size")
    p.add_argument("--model", choices=("er", "tree"), required=True)
    p.add_argument("--sizes", type=int_list, required=True)
    p.add_argument("--q", type=float, default=0.5)
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--theta", choices=("auto", "q"), default="auto")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_experiment)

    p = sub.add_parser("curves", help="P, Q and Q-P over the admissible t range")
    p.add_argument("--n", type=int_list, required=True)
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--spacing", choices=("uniform", "log"), default="uniform")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_curves)

    p = sub.add_parser("spectrum", help="normalized-Laplacian eigenvalues as CSV")
    p.add_argument("--input", required=True)
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_spectrum)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    try:
        args.func(args)
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
