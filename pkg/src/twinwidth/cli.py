"""Batch command line front end.

Results go to stdout, diagnostics to stderr.  Exit codes follow the usual
triple: 0 for success / a true decision, 1 for a false decision or a failed
verification, 2 for usage and parse errors.
"""
from __future__ import annotations

import argparse
import os
import sys

from .certificates import read_certificate, verify_certificate, write_certificate
from .enumeration import enumerate_graphs
from .graphio import GraphFormatError, emit_graph6, parse_edge_list, parse_graph6
from .solver import census_max_tww, decide_tww, twin_width
from .structure import make_named, recognize
from .trigraph import Trigraph


def _load_graph(spec: str) -> Trigraph:
    """Interpret the argument as a file path if one exists, else as graph6."""
    if os.path.exists(spec):
        with open(spec, "r", encoding="utf-8") as fh:
            text = fh.read()
        for raw in text.splitlines():
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if line.split()[0] == "n":
                return parse_edge_list(text)
            return parse_graph6(line)
        raise GraphFormatError(f"no graph found in {spec}")
    return parse_graph6(spec)


def _cmd_tww(args: argparse.Namespace) -> int:
    g = _load_graph(args.input)
    result = twin_width(g, memo_cap=args.memo_cap)
    print(f"tww {result.twin_width}")
    if args.cert:
        if result.certificate is None:
            print("error: no certificate available for this input", file=sys.stderr)
            return 2
        with open(args.cert, "w", encoding="utf-8") as fh:
            fh.write(write_certificate(result.certificate))
    return 0


def _cmd_decide(args: argparse.Namespace) -> int:
    g = _load_graph(args.input)
    if args.budget < 0:
        raise GraphFormatError("budget must be nonnegative")
    ok, _ = decide_tww(g, args.budget)
    print(f"decide {args.budget} {'true' if ok else 'false'}")
    return 0 if ok else 1


def _cmd_verify(args: argparse.Namespace) -> int:
    with open(args.certfile, "r", encoding="utf-8") as fh:
        cert = read_certificate(fh.read())
    result = verify_certificate(cert)
    if result.ok:
        print(f"ok width {result.observed_width}")
        return 0
    step = result.failing_step if result.failing_step is not None else "-"
    print(f"fail width {result.observed_width} step {step}")
    if result.error:
        print(f"error: {result.error}", file=sys.stderr)
    return 1


def _cmd_census(args: argparse.Namespace) -> int:
    result = census_max_tww(args.n, connected_only=args.connected, jobs=args.jobs)
    rows = [f"{r.graph6}\t{r.twin_width}\t{r.states_expanded}" for r in result.records]
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write("\n".join(rows) + "\n")
    else:
        for row in rows:
            print(row)
    print(f"max_tww {result.max_tww} classes {result.classes}")
    if args.ahko:
        print(f"ahko_counterexample {result.ahko_counterexample or 'none'}")
    return 0


def _cmd_enumerate(args: argparse.Namespace) -> int:
    for g in enumerate_graphs(args.n, connected_only=args.connected):
        print(emit_graph6(g))
    return 0


def _cmd_props(args: argparse.Namespace) -> int:
    g = _load_graph(args.input)
    for bound in recognize(g):
        print(f"rule={bound.rule} bound<={bound.value}")
    return 0


def _cmd_gen(args: argparse.Namespace) -> int:
    g = make_named(args.family, args.params)
    print(emit_graph6(g))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twinwidth",
        description="Exact twin-width of small graphs: solve, verify, enumerate, census.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tww", help="compute exact twin-width")
    p.add_argument("input", help="graph6 string, or path to a graph6/edge-list file")
    p.add_argument("--cert", metavar="FILE", help="write a tww-cert v1 witness")
    p.add_argument("--memo-cap", type=int, default=None, help="cap memo table entries")
    p.set_defaults(func=_cmd_tww)

    p = sub.add_parser("decide", help="decide twin-width <= budget (exit 0 yes, 1 no)")
    p.add_argument("input")
    p.add_argument("budget", type=int)
    p.set_defaults(func=_cmd_decide)

    p = sub.add_parser("verify", help="verify a tww-cert v1 file (exit 0 ok, 1 fail)")
    p.add_argument("certfile")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("census", help="exact twin-width of every class on n vertices")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--connected", action="store_true")
    p.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    p.add_argument("--ahko", action="store_true", help="report whether any class reaches n/2")
    p.add_argument("--out", metavar="FILE", help="write TSV rows here instead of stdout")
    p.set_defaults(func=_cmd_census)

    p = sub.add_parser("enumerate", help="one canonical graph6 per isomorphism class")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--connected", action="store_true")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("props", help="structural twin-width bounds for a graph")
    p.add_argument("input")
    p.set_defaults(func=_cmd_props)

    p = sub.add_parser("gen", help="emit a named graph family member as graph6")
    p.add_argument("family", help="complete | bipartite | cycle | path | star | spider")
    p.add_argument("params", type=int, nargs="+")
    p.set_defaults(func=_cmd_gen)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GraphFormatError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
