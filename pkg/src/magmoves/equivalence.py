"""Markov equivalence of MAGs.

Two MAGs over the same nodes are Markov equivalent iff they share adjacencies,
unshielded colliders, and the collider status of every node discriminated by
a path that discriminates it in both graphs.  The graphical test lives here
alongside a brute-force oracle that compares full separation signatures.
"""

from __future__ import annotations

from collections.abc import Iterator

from .errors import InputError
from .graph import Mag, MixedGraph, iter_bits, require_path
from .separation import separation_signature

__all__ = [
    "unshielded_colliders",
    "is_discriminating_path",
    "discriminating_path_exists_for_triple",
    "markov_equivalent",
    "markov_equivalent_bruteforce",
]


def unshielded_colliders(g: MixedGraph) -> frozenset[tuple[int, int, int]]:
    """Triples ``(a, z, b)`` with ``a < b``, both edges pointing into ``z``,
    and ``a``, ``b`` non-adjacent."""
    if g._uc is not None:
        return g._uc
    out = set()
    for z in range(g.n):
        into = g._pa[z] | g._sp[z]
        for a in iter_bits(into):
            for b in iter_bits(into & ~((1 << (a + 1)) - 1)):
                if not (g._adj[a] >> b) & 1:
                    out.add((a, z, b))
    g._uc = frozenset(out)
    return g._uc


def _collider_at(g: MixedGraph, seq: tuple[int, ...], i: int) -> bool:
    w = seq[i]
    return g.arrowhead_toward(seq[i - 1], w) and g.arrowhead_toward(seq[i + 1], w)


def _discriminates_forward(g: MixedGraph, seq: tuple[int, ...]) -> bool:
    """Does ``seq`` discriminate its second-to-last node?

    Needs at least three edges, non-adjacent endpoints, and every node
    strictly between the start and the discriminated node a collider on the
    path and a parent of the final node.
    """
    if len(seq) < 4:
        return False
    y = seq[-1]
    if (g._adj[seq[0]] >> y) & 1:
        return False
    for i in range(1, len(seq) - 2):
        if not _collider_at(g, seq, i):
            return False
        if not (g._ch[seq[i]] >> y) & 1:
            return False
    return True


def is_discriminating_path(g: MixedGraph, path: tuple[int, ...], z: int) -> bool:
    """True iff ``path`` is a discriminating path for ``z`` in ``g``.

    ``path`` must be a valid path; ``z`` must be its second-to-last node in
    one of the two traversal directions, else the answer is False.
    """
    path = tuple(path)
    require_path(g, path)
    g.check_node(z)
    if len(path) < 4:
        return False
    if z == path[-2]:
        return _discriminates_forward(g, path)
    if z == path[1]:
        return _discriminates_forward(g, path[::-1])
    return False


def discriminating_path_exists_for_triple(
    g: MixedGraph, z: int, x: int, y: int
) -> bool:
    """Is there a discriminating path for ``x`` ending with the nodes
    ``..., z, x, y``?

    Requires the edge between ``z`` and ``x`` to carry an arrowhead at ``x``
    and ``x``, ``y`` to be adjacent.  The search is linear: such a path exists
    iff ``z <-> x``, ``z -> y``, and a chain of bi-directed edges through
    parents of ``y`` links ``z`` to some node with an incoming arrowhead from
    a node non-adjacent to ``y``.
    """
    g.check_node(z)
    g.check_node(x)
    g.check_node(y)
    if len({z, x, y}) != 3:
        raise InputError("triple nodes must be distinct")
    if not g.arrowhead_toward(z, x):
        raise InputError(
            "the (z, x) edge must exist and carry an arrowhead at x"
        )
    if not g.has_edge(x, y):
        raise InputError("x and y must be adjacent")
    # z is internal to any such path, hence a collider and a parent of y.
    if not g.is_spouse(z, x) or not g.is_parent(z, y):
        return False
    allowed = g._pa[y] & ~((1 << x) | (1 << y))
    non_nbrs_y = ~(g._adj[y] | (1 << y))
    cur = 1 << z
    seen = 0
    while cur:
        for s in iter_bits(cur):
            if (g._pa[s] | g._sp[s]) & non_nbrs_y:
                return True
        seen |= cur
        nxt = 0
        for s in iter_bits(cur):
            nxt |= g._sp[s]
        cur = nxt & allowed & ~seen
    return False


def _ordered_paths(g: MixedGraph, min_nodes: int) -> Iterator[tuple[int, ...]]:
    # Every simple path in every direction, emitted as soon as it is long
    # enough; extension continues past each yield.
    def walk(w: int, visited: int, acc: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        for v in iter_bits(g._adj[w] & ~visited):
            nxt = acc + (v,)
            if len(nxt) >= min_nodes:
                yield nxt
            yield from walk(v, visited | (1 << v), nxt)

    for s in range(g.n):
        yield from walk(s, 1 << s, (s,))


def _require_same_nodes(m1: Mag, m2: Mag) -> None:
    if m1.n != m2.n or m1.labels != m2.labels:
        raise InputError("graphs must share the same node set")


def markov_equivalent(m1: Mag, m2: Mag) -> bool:
    """Graphical Markov equivalence test for two MAGs on the same nodes."""
    _require_same_nodes(m1, m2)
    g1, g2 = m1.graph, m2.graph
    if g1.skeleton() != g2.skeleton():
        return False
    if unshielded_colliders(g1) != unshielded_colliders(g2):
        return False
    # Shared skeleton, so both graphs carry exactly the same paths.
    for seq in _ordered_paths(g1, 4):
        if _discriminates_forward(g1, seq) and _discriminates_forward(g2, seq):
            i = len(seq) - 2
            if _collider_at(g1, seq, i) != _collider_at(g2, seq, i):
                return False
    return True


def markov_equivalent_bruteforce(m1: Mag, m2: Mag) -> bool:
    """Definitional test: identical m-separation verdicts on every query."""
    _require_same_nodes(m1, m2)
    return separation_signature(m1.graph) == separation_signature(m2.graph)
