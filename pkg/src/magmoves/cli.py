"""Command-line front end.

Exit codes: 0 for success (including positive verdicts), 1 for negative
verdicts (not a MAG, m-connected, not equivalent), 2 for unusable input
(parse failures, unknown nodes, rejected moves, bad flags).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import enumeration
from .errors import InputError
from .graph import (
    Mag,
    MixedGraph,
    bidirected_ancestry_witness,
    directed_cycle_witness,
    format_path,
    is_ancestral,
    maximality_witness,
)
from .equivalence import markov_equivalent, markov_equivalent_bruteforce
from .io import graph_to_dot, graph_to_json_dict, load_graph
from .separation import find_connecting_path, m_connected
from .transform import (
    MoveDescriptor,
    MoveKind,
    apply_move,
    equivalence_class_closure,
    legal_moves,
)

_FORMATS = ("text", "json", "dot")


def _add_format(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--format",
        choices=_FORMATS,
        default="text",
        help="output format (default: text)",
    )


def _node_ids(g: MixedGraph, labels: list[str]) -> list[int]:
    return [g.node_id(lbl) for lbl in labels]


def _split_labels(raw: str) -> list[str]:
    return [part for part in (p.strip() for p in raw.split(",")) if part]


def _emit_graph(g: MixedGraph, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(graph_to_json_dict(g)))
    elif fmt == "dot":
        print(graph_to_dot(g), end="")
    else:
        print("nodes: " + ", ".join(g.labels))
        for e in g.edges:
            arrow = "->" if e.kind.value == "directed" else "<->"
            print(f"{g.labels[e.u]} {arrow} {g.labels[e.v]}")


def _cmd_validate(args: argparse.Namespace) -> int:
    g = load_graph(args.graph)
    ancestral = is_ancestral(g)
    notes: dict[str, object] = {"ancestral": ancestral}
    if ancestral:
        gap = maximality_witness(g)
        notes["maximal"] = gap is None
        if gap is not None:
            x, y, path = gap
            notes["witness"] = (
                f"inducing path {format_path(g, path)} between "
                f"non-adjacent {g.labels[x]}, {g.labels[y]}"
            )
    else:
        cycle = directed_cycle_witness(g)
        if cycle is not None:
            notes["witness"] = f"directed cycle {format_path(g, cycle)}"
        else:
            edge, path = bidirected_ancestry_witness(g)
            notes["witness"] = (
                f"bi-directed edge {g.labels[edge.u]}<->{g.labels[edge.v]} "
                f"with directed path {format_path(g, path)}"
            )
        notes["maximal"] = None
    ok = bool(notes["ancestral"]) and notes["maximal"] is True
    notes["mag"] = ok
    if args.format == "json":
        print(json.dumps(notes))
    else:
        print(f"ancestral: {'yes' if notes['ancestral'] else 'no'}")
        maximal = notes["maximal"]
        print(f"maximal: {'unknown (not ancestral)' if maximal is None else 'yes' if maximal else 'no'}")
        if "witness" in notes:
            print(f"witness: {notes['witness']}")
        print(f"mag: {'yes' if ok else 'no'}")
    return 0 if ok else 1


def _cmd_separate(args: argparse.Namespace) -> int:
    g = load_graph(args.graph)
    x, y = _node_ids(g, [args.x, args.y])
    given = _node_ids(g, _split_labels(args.given))
    connected = m_connected(g, x, y, given)
    path = find_connecting_path(g, x, y, given) if connected else None
    if args.format == "json":
        print(
            json.dumps(
                {
                    "connected": connected,
                    "path": [g.labels[v] for v in path] if path else None,
                }
            )
        )
    else:
        shown = "{" + ", ".join(sorted(g.labels[v] for v in given)) + "}"
        if connected:
            print(f"m-connected given {shown}; path: {format_path(g, path)}")
        else:
            print(f"m-separated given {shown}")
    return 1 if connected else 0


def _cmd_equiv(args: argparse.Namespace) -> int:
    m1 = Mag(load_graph(args.first))
    m2 = Mag(load_graph(args.second))
    if args.oracle:
        same = markov_equivalent_bruteforce(m1, m2)
    else:
        same = markov_equivalent(m1, m2)
    if args.format == "json":
        print(json.dumps({"equivalent": same, "method": "oracle" if args.oracle else "graphical"}))
    else:
        print("equivalent" if same else "not equivalent")
    return 0 if same else 1


def _cmd_moves(args: argparse.Namespace) -> int:
    m = Mag(load_graph(args.graph))
    moves = legal_moves(m)
    if args.format == "json":
        print(
            json.dumps(
                [
                    {"kind": mv.kind.value, "x": m.labels[mv.x], "y": m.labels[mv.y]}
                    for mv in moves
                ]
            )
        )
    else:
        for mv in moves:
            print(f"{mv.kind.value} {m.labels[mv.x]} {m.labels[mv.y]}")
    return 0


def _cmd_apply(args: argparse.Namespace) -> int:
    m = Mag(load_graph(args.graph))
    kind = MoveKind(args.kind)
    x = m.graph.node_id(args.x)
    y = m.graph.node_id(args.y)
    result = apply_move(m, MoveDescriptor(kind, x, y))
    _emit_graph(result.graph, args.format)
    return 0


def _cmd_class(args: argparse.Namespace) -> int:
    m = Mag(load_graph(args.graph))
    res = equivalence_class_closure(m, max_size=args.max)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "keys": sorted(res.keys),
                    "truncated": res.truncated,
                    "graphs": {
                        k: graph_to_json_dict(v.graph)
                        for k, v in sorted(res.graphs.items())
                    },
                }
            )
        )
    else:
        for key in sorted(res.keys):
            print(key)
        if res.truncated:
            print(f"truncated at {args.max}", file=sys.stderr)
    return 0


def _cmd_enumerate(args: argparse.Namespace) -> int:
    first = True
    for m in enumeration.enumerate_mags(args.n):
        if args.format == "json":
            print(json.dumps(graph_to_json_dict(m.graph)))
        elif args.format == "dot":
            if not first:
                print()
            print(graph_to_dot(m.graph), end="")
        else:
            print(m.canonical_key())
        first = False
    return 0


def _cmd_conjecture(args: argparse.Namespace) -> int:
    report = enumeration.test_conjecture1(args.n)
    print(json.dumps(report.to_json_dict(), indent=2))
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    report = enumeration.verify_theorems(args.n)
    print(json.dumps(report.to_json_dict(), indent=2))
    return 0 if all(c.passed for c in report.checks.values()) else 1


def _cmd_dot(args: argparse.Namespace) -> int:
    g = load_graph(args.graph)
    print(graph_to_dot(g), end="")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="magmoves",
        description=(
            "Validate, query, and transform maximal ancestral graphs. "
            "Graph arguments are JSON files; pass - to read stdin."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check ancestral / maximal / MAG status")
    p.add_argument("graph")
    _add_format(p)
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("separate", help="test m-separation of two nodes")
    p.add_argument("graph")
    p.add_argument("--x", required=True, help="first node label")
    p.add_argument("--y", required=True, help="second node label")
    p.add_argument(
        "--given", default="", help="comma-separated conditioning labels"
    )
    _add_format(p)
    p.set_defaults(func=_cmd_separate)

    p = sub.add_parser("equiv", help="test Markov equivalence of two MAGs")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument(
        "--oracle",
        action="store_true",
        help="compare full separation signatures instead of the graphical test",
    )
    _add_format(p)
    p.set_defaults(func=_cmd_equiv)

    p = sub.add_parser("moves", help="list licensed edge replacements")
    p.add_argument("graph")
    _add_format(p)
    p.set_defaults(func=_cmd_moves)

    p = sub.add_parser("apply", help="apply one edge replacement")
    p.add_argument("graph")
    p.add_argument(
        "--kind", required=True, choices=[k.value for k in MoveKind]
    )
    p.add_argument("--x", required=True, help="x endpoint label")
    p.add_argument("--y", required=True, help="y endpoint label")
    _add_format(p)
    p.set_defaults(func=_cmd_apply)

    p = sub.add_parser("class", help="closure of a MAG under licensed moves")
    p.add_argument("graph")
    p.add_argument("--max", type=int, default=1000, help="size cap (default 1000)")
    _add_format(p)
    p.set_defaults(func=_cmd_class)

    p = sub.add_parser("enumerate", help="stream all MAGs on n nodes")
    p.add_argument("--n", type=int, required=True)
    _add_format(p)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser(
        "conjecture", help="delta-blanket sweep report (JSON) for n nodes"
    )
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_conjecture)

    p = sub.add_parser(
        "verify", help="exhaustive theorem verification report (JSON) for n nodes"
    )
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("dot", help="emit a graph in DOT form")
    p.add_argument("graph")
    p.set_defaults(func=_cmd_dot)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:  # console-script hook
    sys.exit(main())


if __name__ == "__main__":
    entry()
