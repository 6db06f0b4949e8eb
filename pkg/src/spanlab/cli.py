"""Command-line interface.

Exit codes: 0 success, 1 value mismatch / counterexample / violated bound,
2 unreadable or malformed input, 3 disconnected input graph, 4 input too
large for an exhaustive routine.
"""

from __future__ import annotations

import argparse
import os
import re
import sys
from typing import Optional, Sequence

from . import families, io, verify
from .engine import compute_span, extract_witness_tracks
from .errors import (
    BadCharError,
    DisconnectedError,
    DuplicateEdgeError,
    EdgeListSyntaxError,
    EmptyGraphError,
    LengthMismatchError,
    OrderTooSmallError,
    ParameterOutOfRangeError,
    SelfLoopError,
    TooLargeError,
    UnknownGraphIdError,
    VertexOutOfRangeError,
)
from .graph import Graph
from .product import MovementRule

_PARSE_ERRORS = (
    EdgeListSyntaxError,
    BadCharError,
    LengthMismatchError,
    SelfLoopError,
    DuplicateEdgeError,
    EmptyGraphError,
    VertexOutOfRangeError,
    UnknownGraphIdError,
    ParameterOutOfRangeError,
)


class _Exit(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _read_graph(path: str, fmt: str) -> Graph:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise _Exit(2, f"cannot read {path}: {exc}") from exc
    if fmt == "auto":
        fmt = "graph6" if path.endswith(".g6") else "edgelist"
    try:
        if fmt == "graph6":
            return io.parse_graph6(text)
        return io.parse_edge_list(text)
    except DisconnectedError as exc:
        raise _Exit(3, f"{path}: {exc}") from exc
    except _PARSE_ERRORS as exc:
        raise _Exit(2, f"{path}: {exc}") from exc


_RULES = {
    "strong": MovementRule.TRADITIONAL,
    "direct": MovementRule.ACTIVE,
    "cartesian": MovementRule.LAZY,
}


def _cmd_span(args: argparse.Namespace) -> int:
    g = _read_graph(args.file, args.format)
    names = list(_RULES) if args.rule == "all" else [args.rule]
    parts = [f"rad={g.radius}"]
    parts += [f"{name}={compute_span(g, _RULES[name]).value}" for name in names]
    print(" ".join(parts))
    return 0


def _cmd_witness(args: argparse.Namespace) -> int:
    g = _read_graph(args.file, args.format)
    report = compute_span(g, _RULES[args.rule])
    tracks = extract_witness_tracks(report)
    widths = [4, 5, 5, 8]
    print(
        f"{'step':>{widths[0]}} {'alice':>{widths[1]}} {'bob':>{widths[2]}}"
        f" {'distance':>{widths[3]}}",
        file=sys.stderr,
    )
    for i, (u, v) in enumerate(tracks.positions(), start=1):
        print(
            f"{i:>{widths[0]}} {g.label(u):>{widths[1]}} {g.label(v):>{widths[2]}}"
            f" {g.distance(u, v):>{widths[3]}}",
            file=sys.stderr,
        )
    sys.stdout.write(io.emit_witness_dot(g, tracks))
    return 0


def _cmd_families(args: argparse.Namespace) -> int:
    caps = {
        "path": args.max_path,
        "cycle": args.max_cycle,
        "hypercube": args.max_hypercube,
        "complete_bipartite": args.max_biclique,
        "complete": args.max_complete,
        "star": args.max_complete,
        "wheel": args.max_complete,
        "paramecium": args.max_paramecium,
        "binary_tree": args.max_tree_height,
    }
    mismatches = 0
    rows = 0
    for spec in families.default_family_sweep():
        cap = caps[spec.kind]
        if spec.n > cap or (spec.m is not None and spec.m > cap):
            continue
        g = families.generate(spec)
        want = families.expected_spans(spec)
        got = tuple(compute_span(g, rule).value for rule in verify.RULES)
        ok = got == want.as_tuple()
        rows += 1
        mismatches += 0 if ok else 1
        verdict = "PASS" if ok else "FAIL"
        if args.machine:
            print(
                f"family={spec.display_name} radius={g.radius}"
                f" strong={got[0]} strong_expected={want.strong}"
                f" direct={got[1]} direct_expected={want.direct}"
                f" cartesian={got[2]} cartesian_expected={want.cartesian}"
                f" pass={int(ok)}"
            )
        else:
            print(
                f"{spec.display_name:<9} rad={g.radius:<2}"
                f" strong={got[0]}/{want.strong}"
                f" direct={got[1]}/{want.direct}"
                f" cartesian={got[2]}/{want.cartesian} {verdict}"
            )
    print(f"{'PASS' if mismatches == 0 else 'FAIL'} {rows - mismatches}/{rows} rows match")
    return 1 if mismatches else 0


def _finish_verify(report: verify.EnumerationReport, args: argparse.Namespace) -> int:
    for line in report.summary_lines():
        print(line)
    if args.records:
        with open(args.records, "w", encoding="utf-8") as fh:
            fh.write("\n".join(report.record_lines()) + "\n")
    return 1 if report.counterexamples else 0


def _cmd_verify_enumerate(args: argparse.Namespace) -> int:
    try:
        corpus = list(verify.enumerate_connected(args.n, dedup=args.dedup))
    except TooLargeError as exc:
        raise _Exit(4, str(exc)) from exc
    report = verify.check_theorems(
        corpus, jobs=args.jobs, check_witnesses=args.witnesses, n=args.n
    )
    return _finish_verify(report, args)


def _cmd_verify_random(args: argparse.Namespace) -> int:
    seed = args.seed
    env = os.environ.get("SPANLAB_SEED")
    if env is not None:
        try:
            seed = int(env)
        except ValueError:
            raise _Exit(2, f"SPANLAB_SEED must be an integer, got {env!r}") from None
    corpus = verify.random_graphs(
        args.count, (args.n_min, args.n_max), args.p, seed
    )
    report = verify.check_theorems(
        list(corpus), jobs=args.jobs, check_witnesses=args.witnesses
    )
    return _finish_verify(report, args)


def _cmd_bounds(args: argparse.Namespace) -> int:
    g = _read_graph(args.file, args.format)
    strong = compute_span(g, MovementRule.TRADITIONAL).value
    cut: Optional[int]
    try:
        cut = verify.cut_edge_bound(g)
    except OrderTooSmallError:
        cut = None
    cut_text = "no bridge" if cut is None else str(cut)
    if args.machine:
        cut_kv = "none" if cut is None else str(cut)
        ok = strong <= g.radius and (cut is None or strong <= cut)
        print(f"radius={g.radius} cut_bound={cut_kv} strong={strong} ok={int(ok)}")
    else:
        print(f"radius bound: {g.radius}")
        print(f"cut-edge bound: {cut_text}")
        print(f"strong span: {strong}")
    if strong > g.radius or (cut is not None and strong > cut):
        print("bound violated by computed span", file=sys.stderr)
        return 1
    return 0


_FAMILY_TOKEN = re.compile(
    r"^(?:(P|C|Q|PC|BT|S|W)(\d+)|K(\d+)(?:[_,x](\d+))?)$", re.IGNORECASE
)

_TOKEN_KINDS = {
    "P": "path",
    "C": "cycle",
    "Q": "hypercube",
    "PC": "paramecium",
    "BT": "binary_tree",
    "S": "star",
    "W": "wheel",
}


def _graph_for_token(token: str) -> Graph:
    if token in families.NAMED_GRAPH_IDS:
        return families.named_graph(token)
    m = _FAMILY_TOKEN.match(token)
    if not m:
        raise UnknownGraphIdError(
            f"unknown graph {token!r}; use one of {', '.join(families.NAMED_GRAPH_IDS)}"
            " or a family token like P5, C6, Q3, K5, K3_4, S4, W5, PC5, BT3"
        )
    if m.group(3) is not None:
        r = int(m.group(3))
        if m.group(4) is not None:
            return families.generate(families.FamilySpec("complete_bipartite", r, int(m.group(4))))
        return families.generate(families.FamilySpec("complete", r))
    kind = _TOKEN_KINDS[m.group(1).upper()]
    return families.generate(families.FamilySpec(kind, int(m.group(2))))


def _cmd_named(args: argparse.Namespace) -> int:
    if args.list:
        for gid in families.NAMED_GRAPH_IDS:
            print(gid)
        return 0
    if args.id is None:
        raise _Exit(2, "a graph id is required (or use --list)")
    try:
        g = _graph_for_token(args.id)
    except (UnknownGraphIdError, ParameterOutOfRangeError) as exc:
        raise _Exit(2, str(exc)) from exc
    if args.format == "graph6":
        print(io.emit_graph6(g))
    else:
        sys.stdout.write(io.emit_edge_list(g))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spanlab",
        description="Vertex spans of connected graphs: maximal safety "
        "distance for two actors that must each visit every vertex.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p: argparse.ArgumentParser) -> None:
        p.add_argument("file", help="graph file (edge list or graph6)")
        p.add_argument(
            "--format",
            choices=("auto", "edgelist", "graph6"),
            default="auto",
            help="input format; auto picks graph6 for *.g6",
        )

    p = sub.add_parser("span", help="compute span values of a graph file")
    add_input(p)
    p.add_argument("--rule", choices=("all", "strong", "direct", "cartesian"), default="all")
    p.add_argument("--machine", action="store_true", help="key=value output (already the default shape)")
    p.set_defaults(func=_cmd_span)

    p = sub.add_parser("witness", help="emit witness walks as DOT (stdout) and a step table (stderr)")
    add_input(p)
    p.add_argument("--rule", choices=("strong", "direct", "cartesian"), required=True)
    p.set_defaults(func=_cmd_witness)

    p = sub.add_parser("families", help="sweep the graph families against their closed-form spans")
    p.add_argument("--max-path", type=int, default=10)
    p.add_argument("--max-cycle", type=int, default=10)
    p.add_argument("--max-hypercube", type=int, default=4)
    p.add_argument("--max-biclique", type=int, default=4)
    p.add_argument("--max-complete", type=int, default=8)
    p.add_argument("--max-paramecium", type=int, default=9)
    p.add_argument("--max-tree-height", type=int, default=4)
    p.add_argument("--machine", action="store_true")
    p.set_defaults(func=_cmd_families)

    def add_verify(p: argparse.ArgumentParser) -> None:
        p.add_argument("--jobs", type=int, default=None, help="worker processes; 1 forces sequential")
        p.add_argument("--witnesses", action="store_true", help="also check witness extraction and transformations")
        p.add_argument("--records", metavar="FILE", help="write one key=value record per graph")

    p = sub.add_parser("verify-enumerate", help="check the span theorems on every connected graph of order n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--dedup", action="store_true", help="one representative per isomorphism class")
    add_verify(p)
    p.set_defaults(func=_cmd_verify_enumerate)

    p = sub.add_parser("verify-random", help="check the span theorems on a seeded random corpus")
    p.add_argument("--count", type=int, default=500)
    p.add_argument("--seed", type=int, default=42, help="overridden by SPANLAB_SEED")
    p.add_argument("--n-min", type=int, default=6)
    p.add_argument("--n-max", type=int, default=12)
    p.add_argument("--p", type=float, default=0.3, help="edge probability")
    add_verify(p)
    p.set_defaults(func=_cmd_verify_random)

    p = sub.add_parser("bounds", help="radius and cut-edge upper bounds next to the strong span")
    add_input(p)
    p.add_argument("--machine", action="store_true")
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("named", help="emit a bundled named graph or family instance")
    p.add_argument("id", nargs="?", help="e.g. fig1, fig6_left, P5, C6, Q3, K3_4, PC5, BT3")
    p.add_argument("--format", choices=("edgelist", "graph6"), default="edgelist")
    p.add_argument("--list", action="store_true", help="list the bundled graph ids")
    p.set_defaults(func=_cmd_named)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _Exit as exc:
        print(f"spanlab: {exc}", file=sys.stderr)
        return exc.code
    except TooLargeError as exc:
        print(f"spanlab: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    raise SystemExit(main())
