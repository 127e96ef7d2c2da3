"""Mixed graphs with directed and bi-directed edges.

A graph holds at most one edge per node pair and no self-loops.  Nodes are
integer ids ``0..n-1`` with optional string labels.  On top of the raw
representation this module provides the ancestral / maximal / MAG validity
checks and the inducing-path test they rest on.

Adjacency is stored as per-node integer bitmasks, which keeps the desk-scale
sweeps used elsewhere in the package cheap without any compiled code.
"""

from __future__ import annotations

import enum
from collections.abc import Iterable, Iterator
from dataclasses import dataclass

from .errors import InputError, NotAMagError, PreconditionError

__all__ = [
    "EdgeKind",
    "Edge",
    "directed",
    "bidirected",
    "MixedGraph",
    "Mag",
    "ancestors",
    "is_ancestral",
    "is_maximal",
    "is_mag",
    "inducing_path_exists",
    "canonical_key",
    "simple_paths_between",
    "iter_bits",
    "directed_cycle_witness",
    "bidirected_ancestry_witness",
    "inducing_path_witness",
    "maximality_witness",
    "format_path",
]

# Pair-mark codes for the internal dict keyed by (i, j) with i < j.
_FWD = 1  # i -> j
_REV = 2  # j -> i
_BI = 3  # i <-> j


class EdgeKind(enum.Enum):
    DIRECTED = "directed"
    BIDIRECTED = "bidirected"


@dataclass(frozen=True)
class Edge:
    """A single edge.  Directed edges run tail ``u`` to head ``v``;
    bi-directed edges are normalized so ``u < v``."""

    kind: EdgeKind
    u: int
    v: int

    def __post_init__(self) -> None:
        if self.u == self.v:
            raise InputError(f"self-loop at node {self.u}")
        if self.kind is EdgeKind.BIDIRECTED and self.u > self.v:
            lo, hi = self.v, self.u
            object.__setattr__(self, "u", lo)
            object.__setattr__(self, "v", hi)

    @property
    def pair(self) -> tuple[int, int]:
        return (self.u, self.v) if self.u < self.v else (self.v, self.u)

    def token(self, labels: tuple[str, ...] | None = None) -> str:
        """Canonical token, ``u>v`` or ``u<>v`` (ids or labels)."""
        a, b = self.u, self.v
        if labels is None:
            u, v = str(a), str(b)
        else:
            u, v = labels[a], labels[b]
        return f"{u}>{v}" if self.kind is EdgeKind.DIRECTED else f"{u}<>{v}"


def directed(u: int, v: int) -> Edge:
    """Edge with tail at ``u`` and arrowhead at ``v``."""
    return Edge(EdgeKind.DIRECTED, u, v)


def bidirected(u: int, v: int) -> Edge:
    """Edge with arrowheads at both ``u`` and ``v``."""
    return Edge(EdgeKind.BIDIRECTED, u, v)


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class MixedGraph:
    """Immutable mixed graph over nodes ``0..n-1``.

    Equality and hashing compare node count and edges only; labels are
    presentation metadata.
    """

    __slots__ = (
        "n",
        "labels",
        "_pairs",
        "_pa",
        "_ch",
        "_sp",
        "_adj",
        "_an",
        "_skel",
        "_key",
        "_hash",
        "_sig",
        "_uc",
    )

    def __init__(
        self,
        n: int,
        edges: Iterable[Edge] = (),
        labels: Iterable[str] | None = None,
    ) -> None:
        if n < 0:
            raise InputError(f"node count must be non-negative, got {n}")
        self.n = n
        if labels is None:
            self.labels = tuple(f"V{i}" for i in range(n))
        else:
            self.labels = tuple(labels)
            if len(self.labels) != n:
                raise InputError(
                    f"expected {n} labels, got {len(self.labels)}"
                )
            if len(set(self.labels)) != n:
                raise InputError("node labels must be distinct")
        pairs: dict[tuple[int, int], int] = {}
        pa = [0] * n
        ch = [0] * n
        sp = [0] * n
        for e in edges:
            if not isinstance(e, Edge):
                raise InputError(f"expected an Edge, got {e!r}")
            u, v = e.u, e.v
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) references an unknown node")
            key = e.pair
            if key in pairs:
                raise InputError(
                    f"more than one edge between nodes {key[0]} and {key[1]}"
                )
            if e.kind is EdgeKind.DIRECTED:
                pairs[key] = _FWD if (u, v) == key else _REV
                ch[u] |= 1 << v
                pa[v] |= 1 << u
            else:
                pairs[key] = _BI
                sp[u] |= 1 << v
                sp[v] |= 1 << u
        self._pairs = pairs
        self._pa = pa
        self._ch = ch
        self._sp = sp
        self._adj = [pa[i] | ch[i] | sp[i] for i in range(n)]
        self._an: list[int | None] = [None] * n
        self._skel: frozenset[tuple[int, int]] | None = None
        self._key: str | None = None
        self._hash: int | None = None
        self._sig: int | None = None
        self._uc: frozenset[tuple[int, int, int]] | None = None

    # -- basic queries ----------------------------------------------------

    @property
    def edges(self) -> tuple[Edge, ...]:
        out = []
        for (i, j), mark in sorted(self._pairs.items()):
            if mark == _FWD:
                out.append(directed(i, j))
            elif mark == _REV:
                out.append(directed(j, i))
            else:
                out.append(bidirected(i, j))
        return tuple(out)

    def check_node(self, x: int) -> None:
        if not isinstance(x, int) or isinstance(x, bool) or not 0 <= x < self.n:
            raise InputError(f"unknown node {x!r}")

    def node_id(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise InputError(f"unknown node label {label!r}") from None

    def has_edge(self, u: int, v: int) -> bool:
        self.check_node(u)
        self.check_node(v)
        return (self._adj[u] >> v) & 1 == 1

    def edge_between(self, u: int, v: int) -> Edge | None:
        self.check_node(u)
        self.check_node(v)
        key = (u, v) if u < v else (v, u)
        mark = self._pairs.get(key)
        if mark is None:
            return None
        if mark == _FWD:
            return directed(*key)
        if mark == _REV:
            return directed(key[1], key[0])
        return bidirected(*key)

    def is_parent(self, u: int, v: int) -> bool:
        """True iff the edge ``u -> v`` is present."""
        self.check_node(u)
        self.check_node(v)
        return (self._ch[u] >> v) & 1 == 1

    def is_spouse(self, u: int, v: int) -> bool:
        """True iff the edge ``u <-> v`` is present."""
        self.check_node(u)
        self.check_node(v)
        return (self._sp[u] >> v) & 1 == 1

    def arrowhead_toward(self, u: int, v: int) -> bool:
        """True iff the edge between ``u`` and ``v`` exists and carries an
        arrowhead at ``v``."""
        self.check_node(u)
        self.check_node(v)
        return ((self._ch[u] | self._sp[u]) >> v) & 1 == 1

    def parents(self, x: int) -> frozenset[int]:
        self.check_node(x)
        return frozenset(iter_bits(self._pa[x]))

    def children(self, x: int) -> frozenset[int]:
        self.check_node(x)
        return frozenset(iter_bits(self._ch[x]))

    def spouses(self, x: int) -> frozenset[int]:
        self.check_node(x)
        return frozenset(iter_bits(self._sp[x]))

    def neighbors(self, x: int) -> frozenset[int]:
        self.check_node(x)
        return frozenset(iter_bits(self._adj[x]))

    # -- bitmask accessors used by the rest of the package ----------------

    def parent_mask(self, x: int) -> int:
        return self._pa[x]

    def child_mask(self, x: int) -> int:
        return self._ch[x]

    def spouse_mask(self, x: int) -> int:
        return self._sp[x]

    def adjacency_mask(self, x: int) -> int:
        return self._adj[x]

    def ancestor_mask(self, x: int) -> int:
        """Bitmask of ancestors of ``x`` (every node with a directed path to
        ``x``, including ``x`` itself)."""
        cached = self._an[x]
        if cached is not None:
            return cached
        seen = 1 << x
        stack = [x]
        while stack:
            w = stack.pop()
            fresh = self._pa[w] & ~seen
            seen |= fresh
            stack.extend(iter_bits(fresh))
        self._an[x] = seen
        return seen

    # -- structure helpers -------------------------------------------------

    def skeleton(self) -> frozenset[tuple[int, int]]:
        """Adjacent pairs ``(i, j)`` with ``i < j``, ignoring marks."""
        if self._skel is None:
            self._skel = frozenset(self._pairs)
        return self._skel

    def with_edge(self, edge: Edge) -> "MixedGraph":
        """Copy of this graph with the edge on ``edge.pair`` replaced (or
        added if the pair was non-adjacent)."""
        keep = [e for e in self.edges if e.pair != edge.pair]
        keep.append(edge)
        return MixedGraph(self.n, keep, labels=self.labels)

    def canonical_key(self) -> str:
        """Deterministic string form: node count, then sorted edge tokens."""
        if self._key is None:
            toks = sorted(e.token() for e in self.edges)
            self._key = ";".join([str(self.n)] + toks)
        return self._key

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MixedGraph):
            return NotImplemented
        return self.n == other.n and self._pairs == other._pairs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, tuple(sorted(self._pairs.items()))))
        return self._hash

    def __repr__(self) -> str:
        return f"MixedGraph({self.canonical_key()!r})"


# -- paths ------------------------------------------------------------------


def format_path(g: MixedGraph, path: tuple[int, ...]) -> str:
    """Render a path with its edge marks, e.g. ``X->Z<->Y``."""
    if not path:
        return ""
    bits = [g.labels[path[0]]]
    for a, b in zip(path, path[1:]):
        e = g.edge_between(a, b)
        if e is None:
            raise InputError(f"nodes {a} and {b} are not adjacent")
        if e.kind is EdgeKind.BIDIRECTED:
            arrow = "<->"
        elif e.u == a:
            arrow = "->"
        else:
            arrow = "<-"
        bits.append(arrow)
        bits.append(g.labels[b])
    return "".join(bits)


def require_path(g: MixedGraph, path: tuple[int, ...]) -> None:
    """Raise unless ``path`` is a simple path of ``g`` with >= 2 nodes."""
    if len(path) < 2:
        raise InputError("a path needs at least two nodes")
    if len(set(path)) != len(path):
        raise InputError("path nodes must be distinct")
    for x in path:
        g.check_node(x)
    for a, b in zip(path, path[1:]):
        if not g.has_edge(a, b):
            raise InputError(f"nodes {a} and {b} are not adjacent")


def simple_paths_between(
    g: MixedGraph, x: int, y: int
) -> Iterator[tuple[int, ...]]:
    """All simple paths from ``x`` to ``y``, in deterministic DFS order."""
    g.check_node(x)
    g.check_node(y)
    if x == y:
        raise InputError("path endpoints must differ")
    ybit = 1 << y

    def walk(w: int, visited: int, acc: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        nbrs = g._adj[w] & ~visited
        if nbrs & ybit:
            yield acc + (y,)
        for v in iter_bits(nbrs & ~ybit):
            yield from walk(v, visited | (1 << v), acc + (v,))

    yield from walk(x, 1 << x, (x,))


# -- validity ----------------------------------------------------------------


def ancestors(g: MixedGraph, x: int) -> frozenset[int]:
    """Nodes with a directed path into ``x``; includes ``x``."""
    g.check_node(x)
    return frozenset(iter_bits(g.ancestor_mask(x)))


def directed_cycle_witness(g: MixedGraph) -> tuple[int, ...] | None:
    """A directed cycle as a node tuple (first == last), or None."""
    for e in g.edges:
        if e.kind is EdgeKind.DIRECTED and (g.ancestor_mask(e.u) >> e.v) & 1:
            # e.v reaches e.u by directed edges; recover one such path.
            path = _directed_path(g, e.v, e.u)
            return path + (e.v,)
    return None


def _directed_path(g: MixedGraph, src: int, dst: int) -> tuple[int, ...]:
    # BFS over child edges from src to dst; caller guarantees existence.
    prev = {src: None}
    queue = [src]
    while queue:
        w = queue.pop(0)
        if w == dst:
            break
        for v in iter_bits(g._ch[w]):
            if v not in prev:
                prev[v] = w
                queue.append(v)
    out = [dst]
    while prev[out[-1]] is not None:
        out.append(prev[out[-1]])
    return tuple(reversed(out))


def bidirected_ancestry_witness(
    g: MixedGraph,
) -> tuple[Edge, tuple[int, ...]] | None:
    """A bi-directed edge one of whose endpoints is an ancestor of the other,
    with the offending directed path, or None."""
    for e in g.edges:
        if e.kind is not EdgeKind.BIDIRECTED:
            continue
        if (g.ancestor_mask(e.v) >> e.u) & 1:
            return e, _directed_path(g, e.u, e.v)
        if (g.ancestor_mask(e.u) >> e.v) & 1:
            return e, _directed_path(g, e.v, e.u)
    return None


def is_ancestral(g: MixedGraph) -> bool:
    """No directed cycles, and no directed path between the endpoints of any
    bi-directed edge."""
    for (i, j), mark in g._pairs.items():
        if mark == _FWD:
            if (g.ancestor_mask(i) >> j) & 1:
                return False
        elif mark == _REV:
            if (g.ancestor_mask(j) >> i) & 1:
                return False
        else:
            ai = g.ancestor_mask(i)
            aj = g.ancestor_mask(j)
            if ((ai >> j) & 1) or ((aj >> i) & 1):
                return False
    return True


def inducing_path_exists(g: MixedGraph, x: int, y: int) -> bool:
    """True iff some path from ``x`` to ``y`` has every internal node a
    collider on the path and an ancestor of ``x`` or ``y``.

    A single edge qualifies vacuously.  Internal nodes of such a path are
    pairwise linked by bi-directed edges, so a reachability sweep over the
    bi-directed core is exact; no path enumeration is needed.
    """
    g.check_node(x)
    g.check_node(y)
    if x == y:
        raise InputError("inducing path endpoints must differ")
    if g.has_edge(x, y):
        return True
    allowed = (g.ancestor_mask(x) | g.ancestor_mask(y)) & ~((1 << x) | (1 << y))
    accept = (g._ch[y] | g._sp[y]) & allowed  # arrowhead at w on the (w, y) edge
    cur = (g._ch[x] | g._sp[x]) & allowed  # arrowhead at w on the (x, w) edge
    seen = 0
    while cur:
        if cur & accept:
            return True
        seen |= cur
        nxt = 0
        for w in iter_bits(cur):
            nxt |= g._sp[w]
        cur = nxt & allowed & ~seen
    return False


def inducing_path_witness(
    g: MixedGraph, x: int, y: int
) -> tuple[int, ...] | None:
    """One inducing path from ``x`` to ``y`` as a node tuple, or None."""
    g.check_node(x)
    g.check_node(y)
    if x == y:
        raise InputError("inducing path endpoints must differ")
    if g.has_edge(x, y):
        return (x, y)
    allowed = (g.ancestor_mask(x) | g.ancestor_mask(y)) & ~((1 << x) | (1 << y))
    accept = (g._ch[y] | g._sp[y]) & allowed
    prev: dict[int, int | None] = {}
    queue = []
    for w in iter_bits((g._ch[x] | g._sp[x]) & allowed):
        prev[w] = None
        queue.append(w)
    while queue:
        w = queue.pop(0)
        if (accept >> w) & 1:
            mid = [w]
            while prev[mid[-1]] is not None:
                mid.append(prev[mid[-1]])
            return (x,) + tuple(reversed(mid)) + (y,)
        for v in iter_bits(g._sp[w] & allowed):
            if v not in prev:
                prev[v] = w
                queue.append(v)
    return None


def maximality_witness(
    g: MixedGraph,
) -> tuple[int, int, tuple[int, ...]] | None:
    """A non-adjacent pair joined by an inducing path, or None."""
    for x in range(g.n):
        for y in range(x + 1, g.n):
            if g.has_edge(x, y):
                continue
            path = inducing_path_witness(g, x, y)
            if path is not None:
                return x, y, path
    return None


def is_maximal(g: MixedGraph) -> bool:
    """No inducing path between any non-adjacent pair.

    Only defined on ancestral graphs.
    """
    if not is_ancestral(g):
        raise PreconditionError("is_maximal requires an ancestral graph")
    for x in range(g.n):
        for y in range(x + 1, g.n):
            if not g.has_edge(x, y) and inducing_path_exists(g, x, y):
                return False
    return True


def is_mag(g: MixedGraph) -> bool:
    """Ancestral and maximal."""
    return is_ancestral(g) and is_maximal(g)


def canonical_key(g: "MixedGraph | Mag") -> str:
    return g.canonical_key()


class Mag:
    """A validated maximal ancestral graph.

    Construction runs the full validity check and raises
    :class:`NotAMagError` with a witness description on failure.
    """

    __slots__ = ("graph",)

    def __init__(self, graph: MixedGraph) -> None:
        if not isinstance(graph, MixedGraph):
            raise InputError(f"expected a MixedGraph, got {graph!r}")
        cycle = directed_cycle_witness(graph)
        if cycle is not None:
            raise NotAMagError(
                f"not ancestral: directed cycle {format_path(graph, cycle)}"
            )
        bad = bidirected_ancestry_witness(graph)
        if bad is not None:
            edge, path = bad
            raise NotAMagError(
                "not ancestral: bi-directed edge "
                f"{graph.labels[edge.u]}<->{graph.labels[edge.v]} "
                f"with directed path {format_path(graph, path)}"
            )
        gap = maximality_witness(graph)
        if gap is not None:
            x, y, path = gap
            raise NotAMagError(
                f"not maximal: non-adjacent pair ({graph.labels[x]}, "
                f"{graph.labels[y]}) joined by inducing path "
                f"{format_path(graph, path)}"
            )
        self.graph = graph

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def labels(self) -> tuple[str, ...]:
        return self.graph.labels

    @property
    def edges(self) -> tuple[Edge, ...]:
        return self.graph.edges

    def canonical_key(self) -> str:
        return self.graph.canonical_key()

    def parents(self, x: int) -> frozenset[int]:
        return self.graph.parents(x)

    def children(self, x: int) -> frozenset[int]:
        return self.graph.children(x)

    def spouses(self, x: int) -> frozenset[int]:
        return self.graph.spouses(x)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Mag):
            return self.graph == other.graph
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.graph)

    def __repr__(self) -> str:
        return f"Mag({self.canonical_key()!r})"
