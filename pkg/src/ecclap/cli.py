"""Command-line interface.

Exit codes: 0 success, 2 parse/usage error, 3 disconnected input,
4 verification violations, 5 eigensolver non-convergence.
"""

from __future__ import annotations

import argparse
import logging
import sys

from .bounds import DEFAULT_BOUNDS_TOL
from .graph_core import GraphError, GraphFamily, generate_family, parse_edge_list, parse_graph6
from .harness import (
    DEFAULT_RESIDUAL_TOL,
    RunConfig,
    analyze_graph,
    render_analysis,
    render_batch,
    render_verify,
    run_batch,
    run_verify,
)
from .linalg import DEFAULT_TOL, ConvergenceError
from .metrics import DisconnectedGraphError

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_DISCONNECTED = 3
EXIT_VIOLATIONS = 4
EXIT_NO_CONVERGENCE = 5

log = logging.getLogger("ecclap")


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="ascii") as fh:
        return fh.read()


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="ascii", newline="") as fh:
            fh.write(text)


def _family_arg(values: list[str]) -> tuple:
    name, *params = values
    try:
        return (name, *(int(p) for p in params))
    except ValueError:
        raise argparse.ArgumentTypeError(f"family parameters must be integers: {params}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ecclap",
        description="Eccentricity Laplacian energy of graphs and verification of its bounds.",
    )
    parser.add_argument("--format", dest="output_format", choices=("csv", "json"), default=None)
    parser.add_argument("--out", default=None, help="write the report here instead of stdout")
    parser.add_argument("-v", "--verbose", action="store_true")

    # Subcommand copies of the global options must not clobber a value given
    # before the subcommand.
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", dest="output_format", choices=("csv", "json"),
                        default=argparse.SUPPRESS)
    common.add_argument("--out", default=argparse.SUPPRESS)
    common.add_argument("--tol", type=float, default=DEFAULT_BOUNDS_TOL,
                        help="relative slack for bound checks (default %(default)g)")
    common.add_argument("--solver-tol", type=float, default=DEFAULT_TOL,
                        help="Jacobi off-diagonal tolerance (default %(default)g)")

    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser("analyze", parents=[common], help="report on one graph")
    src = analyze.add_mutually_exclusive_group(required=True)
    src.add_argument("--edge-list", metavar="PATH")
    src.add_argument("--graph6", metavar="PATH")
    src.add_argument("--family", nargs="+", metavar="ARG",
                     help="family name then integer parameters, e.g. complete_bipartite 2 3")

    family = sub.add_parser("family", parents=[common], help="report on a named family member")
    family.add_argument("family", nargs="+", metavar="ARG")

    verify = sub.add_parser("verify", parents=[common],
                            help="check all labeled connected graphs up to --n-max")
    verify.add_argument("--n-max", type=int, required=True)
    verify.add_argument("--residual-tol", type=float, default=DEFAULT_RESIDUAL_TOL,
                        help="lemma residual threshold per vertex (default %(default)g)")
    verify.add_argument("--workers", type=int, default=1)

    batch = sub.add_parser("batch", parents=[common], help="report on each graph6 line of a file")
    batch.add_argument("--graph6-file", metavar="PATH", required=True)
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    default_format = "json" if args.command in ("analyze", "family") else "csv"
    family = getattr(args, "family", None)
    return RunConfig(
        command=args.command,
        edge_list=getattr(args, "edge_list", None),
        graph6=getattr(args, "graph6", None),
        family=_family_arg(family) if family else None,
        graph6_file=getattr(args, "graph6_file", None),
        n_max=getattr(args, "n_max", 0),
        tol=args.tol,
        solver_tol=args.solver_tol,
        residual_tol=getattr(args, "residual_tol", DEFAULT_RESIDUAL_TOL),
        workers=getattr(args, "workers", 1),
        output_format=args.output_format or default_format,
        out=args.out,
    )


def _load_graph(cfg: RunConfig):
    if cfg.edge_list is not None:
        return parse_edge_list(_read(cfg.edge_list))
    if cfg.graph6 is not None:
        lines = [ln for ln in _read(cfg.graph6).splitlines() if ln.strip()]
        if len(lines) != 1:
            raise GraphError(f"expected exactly one graph6 line, found {len(lines)}")
        return parse_graph6(lines[0])
    name, *params = cfg.family
    return generate_family(GraphFamily(name, tuple(params)))


def run(cfg: RunConfig) -> int:
    if cfg.command in ("analyze", "family"):
        g = _load_graph(cfg)
        energy, bounds = analyze_graph(g, cfg.tol, cfg.solver_tol)
        _emit(render_analysis(energy, bounds, cfg.output_format), cfg.out)
        return EXIT_OK
    if cfg.command == "batch":
        records = run_batch(_read(cfg.graph6_file).splitlines(), cfg.tol, cfg.solver_tol)
        _emit(render_batch(records, cfg.output_format), cfg.out)
        skipped = sum(r.status != "ok" for r in records)
        if skipped:
            log.warning("%d of %d lines skipped", skipped, len(records))
        return EXIT_OK
    summary, reports = run_verify(cfg.n_max, cfg.tol, cfg.solver_tol, cfg.residual_tol,
                                  cfg.workers)
    _emit(render_verify(summary, reports, cfg.output_format), cfg.out)
    print(summary.describe(), file=sys.stderr)
    return EXIT_OK if summary.passed else EXIT_VIOLATIONS


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        cfg = config_from_args(args)
        return run(cfg)
    except argparse.ArgumentTypeError as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except DisconnectedGraphError:
        print("error: input must be a connected graph", file=sys.stderr)
        return EXIT_DISCONNECTED
    except ConvergenceError as exc:
        print(f"error: eigensolver did not converge: {exc}", file=sys.stderr)
        return EXIT_NO_CONVERGENCE
    except (GraphError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
