"""Graph serialization.

JSON is the interchange format:

    {"nodes": ["A", "B"], "edges": [{"u": "A", "v": "B", "type": "directed"}]}

DOT output renders directed edges as ``A -> B`` and bi-directed edges as
``A -> B [dir=both]``.  A reader for exactly that DOT subset is included so
emitted files round-trip.
"""

from __future__ import annotations

import json
import re
import sys

from .errors import ParseError
from .graph import Edge, EdgeKind, MixedGraph, bidirected, directed

__all__ = [
    "graph_from_json_dict",
    "graph_to_json_dict",
    "parse_graph_json",
    "graph_to_json",
    "graph_to_dot",
    "parse_dot",
    "load_graph",
]


def graph_from_json_dict(data: object) -> MixedGraph:
    if not isinstance(data, dict):
        raise ParseError("graph document must be a JSON object")
    unknown = set(data) - {"nodes", "edges"}
    if unknown:
        raise ParseError(f"unknown graph fields: {sorted(unknown)}")
    nodes = data.get("nodes")
    if not isinstance(nodes, list) or not all(isinstance(x, str) for x in nodes):
        raise ParseError("'nodes' must be a list of strings")
    if len(set(nodes)) != len(nodes):
        dup = next(x for i, x in enumerate(nodes) if x in nodes[:i])
        raise ParseError(f"duplicate node label {dup!r}")
    index = {label: i for i, label in enumerate(nodes)}
    raw_edges = data.get("edges", [])
    if not isinstance(raw_edges, list):
        raise ParseError("'edges' must be a list")
    edges: list[Edge] = []
    seen_pairs = set()
    for item in raw_edges:
        if not isinstance(item, dict) or set(item) != {"u", "v", "type"}:
            raise ParseError(
                "each edge must be an object with fields 'u', 'v', 'type'"
            )
        for end in ("u", "v"):
            if item[end] not in index:
                raise ParseError(
                    f"edge endpoint {item[end]!r} is not a declared node"
                )
        u, v = index[item["u"]], index[item["v"]]
        if u == v:
            raise ParseError(f"self-loop at node {item['u']!r}")
        pair = (min(u, v), max(u, v))
        if pair in seen_pairs:
            raise ParseError(
                f"more than one edge between {nodes[pair[0]]!r} "
                f"and {nodes[pair[1]]!r}"
            )
        seen_pairs.add(pair)
        kind = item["type"]
        if kind == "directed":
            edges.append(directed(u, v))
        elif kind == "bidirected":
            edges.append(bidirected(u, v))
        else:
            raise ParseError(f"unknown edge type {kind!r}")
    return MixedGraph(len(nodes), edges, labels=nodes)


def parse_graph_json(text: str) -> MixedGraph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    return graph_from_json_dict(data)


def graph_to_json_dict(g: MixedGraph) -> dict:
    return {
        "nodes": list(g.labels),
        "edges": [
            {
                "u": g.labels[e.u],
                "v": g.labels[e.v],
                "type": e.kind.value,
            }
            for e in g.edges
        ],
    }


def graph_to_json(g: MixedGraph, indent: int | None = 2) -> str:
    return json.dumps(graph_to_json_dict(g), indent=indent)


def _dot_quote(label: str) -> str:
    return '"' + label.replace("\\", "\\\\").replace('"', '\\"') + '"'


def graph_to_dot(g: MixedGraph) -> str:
    lines = ["digraph {"]
    for label in g.labels:
        lines.append(f"  {_dot_quote(label)};")
    for e in g.edges:
        u, v = _dot_quote(g.labels[e.u]), _dot_quote(g.labels[e.v])
        if e.kind is EdgeKind.DIRECTED:
            lines.append(f"  {u} -> {v};")
        else:
            lines.append(f"  {u} -> {v} [dir=both];")
    lines.append("}")
    return "\n".join(lines) + "\n"


_DOT_NAME = r'(?:"(?P<q{0}>(?:[^"\\]|\\.)*)"|(?P<p{0}>[A-Za-z0-9_]+))'
_DOT_NODE = re.compile(r"^\s*" + _DOT_NAME.format(1) + r"\s*;\s*$")
_DOT_EDGE = re.compile(
    r"^\s*"
    + _DOT_NAME.format(1)
    + r"\s*->\s*"
    + _DOT_NAME.format(2)
    + r"\s*(?P<attrs>\[\s*dir\s*=\s*both\s*\])?\s*;\s*$"
)


def _dot_unquote(match: re.Match, slot: int) -> str:
    quoted = match.group(f"q{slot}")
    if quoted is not None:
        return re.sub(r"\\(.)", r"\1", quoted)
    return match.group(f"p{slot}")


def parse_dot(text: str) -> MixedGraph:
    """Read the DOT subset produced by :func:`graph_to_dot`."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].strip().startswith("digraph"):
        raise ParseError("expected a digraph block")
    if lines[-1].strip() != "}":
        raise ParseError("unterminated digraph block")
    labels: list[str] = []
    edge_specs: list[tuple[str, str, bool]] = []
    for ln in lines[1:-1]:
        m = _DOT_NODE.match(ln)
        if m:
            labels.append(_dot_unquote(m, 1))
            continue
        m = _DOT_EDGE.match(ln)
        if m:
            edge_specs.append(
                (_dot_unquote(m, 1), _dot_unquote(m, 2), m.group("attrs") is not None)
            )
            continue
        raise ParseError(f"unrecognized DOT statement: {ln.strip()!r}")
    if len(set(labels)) != len(labels):
        raise ParseError("duplicate node statement")
    index = {label: i for i, label in enumerate(labels)}
    edges = []
    for u, v, both in edge_specs:
        if u not in index or v not in index:
            raise ParseError(f"edge references undeclared node {u!r} or {v!r}")
        edges.append(
            bidirected(index[u], index[v]) if both else directed(index[u], index[v])
        )
    try:
        return MixedGraph(len(labels), edges, labels=labels)
    except Exception as exc:
        raise ParseError(str(exc)) from None


def load_graph(path: str) -> MixedGraph:
    """Read a JSON graph from a file path, or from stdin when path is '-'."""
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise ParseError(f"cannot read {path!r}: {exc}") from None
    return parse_graph_json(text)
