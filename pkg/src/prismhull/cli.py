"""Command-line interface.

Verbs: interval, hull, hullnum, prism, gen, verify. Graphs come either from
an edge-list file or from a family DSL string via --gen. Vertex sets print
in ascending order, and identical command lines produce identical bytes.

Exit codes: 0 ok, 2 parse error, 3 vertex range error, 4 size cap exceeded,
5 verification failure.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .convexity import all_pairs_distances, convex_hull, interval_set
from .edgelist import format_edgelist, parse_edgelist
from .errors import CapExceededError, ParseError, VertexRangeError
from .families import graph_from_dsl
from .graphs import Graph, VertexSet, complementary_prism
from .solver import SearchConfig, hull_number, hull_number_prism
from .verify import CATALOG_IDS, default_suite, failures, format_report

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_RANGE = 3
EXIT_CAP = 4
EXIT_VERIFY = 5


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="prismhull",
        description="Geodetic intervals, convex hulls, and exact hull numbers "
        "of graphs and their complementary prisms.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def add_input(p, with_set=False):
        p.add_argument("input", nargs="?", help="edge-list file")
        p.add_argument("--gen", metavar="DSL", help="generate from a family DSL string")
        p.add_argument("--seed", type=int, default=0,
                       help="seed for DSL families that omit :seed=")
        if with_set:
            p.add_argument("--set", required=True, metavar="S",
                           help="comma-separated vertices, e.g. 0,2,5")

    p = sub.add_parser("interval", help="closed interval of a vertex set")
    add_input(p, with_set=True)
    p = sub.add_parser("hull", help="convex hull of a vertex set, with trace")
    add_input(p, with_set=True)
    p = sub.add_parser("hullnum", help="exact hull number and a minimum hull set")
    add_input(p)
    p.add_argument("--max-vertices", type=int, default=24)
    p.add_argument("--workers", type=int, default=1)
    p = sub.add_parser("prism", help="write the complementary prism as an edge list")
    add_input(p)
    p.add_argument("--out", metavar="PATH")
    p = sub.add_parser("gen", help="write the graph as a canonical edge list")
    add_input(p)
    p.add_argument("--out", metavar="PATH")
    p = sub.add_parser("verify", help="run the claims catalog and report verdicts")
    p.add_argument("--theorem", metavar="ID", help=f"one of {', '.join(CATALOG_IDS)}")
    p.add_argument("--range", dest="sweep", metavar="A..B",
                   help="size range for the value sweeps, e.g. 2..6")
    p.add_argument("--max-vertices", type=int, default=24)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out", metavar="PATH")
    return parser


def _load_graph(args) -> Graph:
    if (args.input is None) == (args.gen is None):
        raise ParseError("provide exactly one input: an edge-list file or --gen DSL")
    if args.gen is not None:
        return graph_from_dsl(args.gen, default_seed=args.seed)
    try:
        text = Path(args.input).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {args.input!r}: {exc}") from exc
    return parse_edgelist(text)


def _parse_set(g: Graph, text: str) -> VertexSet:
    members = []
    for token in text.split(","):
        token = token.strip()
        try:
            members.append(int(token))
        except ValueError:
            raise ParseError(f"bad vertex token {token!r} in --set") from None
    return VertexSet.of(g.n, members)


def _prism_base_dsl(text: str) -> str | None:
    """The inner DSL when text is exactly prism(...), else None."""
    text = text.strip()
    if not (text.startswith("prism(") and text.endswith(")")):
        return None
    inner = text[len("prism("):-1]
    depth = 0
    for ch in inner:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                return None
    return inner if depth == 0 else None


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _parse_sweep(text: str) -> range:
    parts = text.split("..")
    if len(parts) != 2:
        raise ParseError(f"bad range {text!r}: expected A..B")
    try:
        lo, hi = int(parts[0]), int(parts[1])
    except ValueError:
        raise ParseError(f"bad range {text!r}: bounds must be integers") from None
    if lo > hi:
        raise ParseError(f"bad range {text!r}: empty")
    return range(lo, hi + 1)


def _dispatch(args) -> int:
    if args.verb == "interval":
        g = _load_graph(args)
        s = _parse_set(g, args.set)
        dm = all_pairs_distances(g)
        print(interval_set(g, dm, s))
        return EXIT_OK

    if args.verb == "hull":
        g = _load_graph(args)
        s = _parse_set(g, args.set)
        dm = all_pairs_distances(g)
        trace = convex_hull(g, dm, s)
        for p in range(trace.fixpoint_index + 1):
            print(f"step {p}: {trace.steps[p]}")
        print(f"hull = {trace.final}")
        return EXIT_OK

    if args.verb == "hullnum":
        cfg = SearchConfig(max_vertices=args.max_vertices, parallel_width=args.workers)
        base_dsl = _prism_base_dsl(args.gen) if args.gen else None
        if base_dsl is not None:
            report = hull_number_prism(graph_from_dsl(base_dsl, default_seed=args.seed), cfg)
        else:
            report = hull_number(_load_graph(args), cfg)
        print(f"h = {report.hull_number}")
        print(f"witness = {report.witness}")
        print(f"forced = {report.forced}")
        print(f"sets_tested = {report.sets_tested}")
        return EXIT_OK

    if args.verb == "prism":
        g = _load_graph(args)
        _emit(format_edgelist(complementary_prism(g)), args.out)
        return EXIT_OK

    if args.verb == "gen":
        g = _load_graph(args)
        _emit(format_edgelist(g), args.out)
        return EXIT_OK

    if args.verb == "verify":
        cfg = SearchConfig(max_vertices=args.max_vertices, parallel_width=args.workers)
        if args.theorem is not None and args.theorem not in CATALOG_IDS:
            raise ParseError(f"unknown catalog id {args.theorem!r}")
        sweep = _parse_sweep(args.sweep) if args.sweep else None
        checks = default_suite(cfg, only=args.theorem, sweep_range=sweep)
        _emit(format_report(checks), args.out)
        return EXIT_VERIFY if failures(checks) else EXIT_OK

    raise AssertionError(f"unhandled verb {args.verb}")


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _dispatch(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except VertexRangeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RANGE
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
