"""Exhaustive enumeration of small MAGs and the sweeps built on it.

Includes the equivalence-class partition, the path-family check behind the
blanket predicate, the full theorem verification report, and the
counterexample hunt for the delta-blanket conjecture.  Everything here is
desk scale: node counts up to five.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from collections.abc import Iterable, Iterator

from . import _kernels
from .errors import InputError
from .graph import Mag, MixedGraph, bidirected, directed, is_mag, iter_bits
from .equivalence import markov_equivalent, markov_equivalent_bruteforce
from .separation import separation_signature
from .transform import (
    MoveKind,
    apply_move,
    blanketed_bidirected_violation,
    blanketed_directed_violation,
    equivalence_class_closure,
    delta,
    is_blanketed_bidirected_against,
    is_blanketed_directed,
    is_screened,
    legal_moves,
)

__all__ = [
    "PRACTICAL_MAX_N",
    "graph_from_pair_code",
    "enumerate_mags",
    "ClassPartition",
    "partition_into_classes",
    "check_lemma1",
    "ConjectureReport",
    "CheckOutcome",
    "EquivalenceReport",
    "test_conjecture1",
    "verify_theorems",
]

PRACTICAL_MAX_N = 5


def graph_from_pair_code(
    n: int, code: int, labels: Iterable[str] | None = None
) -> MixedGraph:
    """Decode a base-4 pair-state code (see :mod:`magmoves._kernels`)."""
    edges = []
    for p, (u, v) in enumerate(_kernels.pair_list(n)):
        s = (code >> (2 * p)) & 3
        if s == 1:
            edges.append(directed(u, v))
        elif s == 2:
            edges.append(directed(v, u))
        elif s == 3:
            edges.append(bidirected(u, v))
    return MixedGraph(n, edges, labels=labels)


def _key_from_pair_code(n: int, code: int) -> str:
    toks = []
    for p, (u, v) in enumerate(_kernels.pair_list(n)):
        s = (code >> (2 * p)) & 3
        if s == 1:
            toks.append(f"{u}>{v}")
        elif s == 2:
            toks.append(f"{v}>{u}")
        elif s == 3:
            toks.append(f"{u}<>{v}")
    return ";".join([str(n)] + sorted(toks))


def enumerate_mags(n: int) -> Iterator[Mag]:
    """All MAGs on ``n`` unlabeled nodes, streamed in canonical-key order.

    Each emitted graph passes full validation again on construction,
    independent of the kernel that produced its code.
    """
    if not isinstance(n, int) or isinstance(n, bool) or not 1 <= n <= PRACTICAL_MAX_N:
        raise InputError(
            f"node count must be between 1 and {PRACTICAL_MAX_N}, got {n!r}"
        )
    codes = _kernels.enumerate_mag_codes(n)
    keyed = sorted((_key_from_pair_code(n, int(c)), int(c)) for c in codes)
    for _, code in keyed:
        yield Mag(graph_from_pair_code(n, code))


@dataclass(frozen=True)
class ClassPartition:
    """Markov equivalence classes of a MAG collection.

    Classes are numbered by their smallest canonical key; member key tuples
    are sorted.
    """

    class_of: dict[str, int]
    classes: tuple[tuple[str, ...], ...]
    graphs_by_key: dict[str, Mag]

    @property
    def class_count(self) -> int:
        return len(self.classes)


def partition_into_classes(mags: Iterable[Mag]) -> ClassPartition:
    """Group MAGs by separation signature (definitional equivalence)."""
    by_key: dict[str, Mag] = {}
    groups: dict[int, list[str]] = {}
    n = None
    labels = None
    for m in mags:
        if n is None:
            n, labels = m.n, m.labels
        elif m.n != n or m.labels != labels:
            raise InputError("all graphs must share the same node set")
        key = m.canonical_key()
        if key in by_key:
            raise InputError(f"duplicate graph {key}")
        by_key[key] = m
        groups.setdefault(separation_signature(m.graph), []).append(key)
    classes = tuple(
        tuple(sorted(g)) for g in sorted(groups.values(), key=lambda g: min(g))
    )
    class_of = {k: i for i, keys in enumerate(classes) for k in keys}
    return ClassPartition(class_of, classes, by_key)


def _collider_entry_paths(
    g: MixedGraph, x: int, avoid: int
) -> Iterator[tuple[int, ...]]:
    # Node sequences (a_1, ..., a_k) such that (a_1, ..., a_k, x) is a path
    # whose internal nodes are all colliders on it: a_k <-> x, consecutive
    # chain links bi-directed, and a_1 either the chain end or a node with
    # an arrowhead into a_2.  Nodes in `avoid` never appear.
    banned = avoid | (1 << x)

    def grow(chain: tuple[int, ...], visited: int) -> Iterator[tuple[int, ...]]:
        head = chain[0]
        yield chain
        for w in iter_bits(g._pa[head] & ~visited):
            yield (w,) + chain
        for s in iter_bits(g._sp[head] & ~visited):
            yield from grow((s,) + chain, visited | (1 << s))

    for a in iter_bits(g._sp[x] & ~banned):
        yield from grow((a,), banned | (1 << a))


def check_lemma1(m: Mag, x: int, y: int) -> bool:
    """For a blanketed edge between ``x`` and ``y``: does every path into
    ``x`` whose internal nodes are all colliders, ending in a spouse of
    ``x`` and avoiding ``y``, contain a spouse of ``y`` or consist entirely
    of parents of ``y``?"""
    g = m.graph
    if g.is_parent(x, y):
        reason = blanketed_directed_violation(m, x, y)
    elif g.is_spouse(x, y):
        reason = blanketed_bidirected_violation(m, x, y)
    else:
        raise InputError("x and y must be joined by a directed or bi-directed edge")
    if reason is not None:
        raise InputError(f"edge is not blanketed: {reason}")
    sp_y = g._sp[y]
    pa_y = g._pa[y]
    for seq in _collider_entry_paths(g, x, 1 << y):
        if any((sp_y >> a) & 1 for a in seq):
            continue
        if all((pa_y >> a) & 1 for a in seq):
            continue
        return False
    return True


@dataclass(frozen=True)
class ConjectureReport:
    """Outcome of the delta-blanket sweep at one node count."""

    n: int
    mag_count: int
    class_count: int
    classes_examined: int
    pairs_examined: int
    counterexamples: tuple[tuple[str, str, tuple[str, ...]], ...]
    closure_gaps: tuple[tuple[int, int], ...]

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "mag_count": self.mag_count,
            "class_count": self.class_count,
            "classes_examined": self.classes_examined,
            "pairs_examined": self.pairs_examined,
            "counterexamples": [
                {"first": a, "second": b, "delta": list(d)}
                for a, b, d in self.counterexamples
            ],
            "closure_gaps": [
                {"class_id": cid, "unreachable": cnt}
                for cid, cnt in self.closure_gaps
            ],
            "checks": {},
        }


@dataclass(frozen=True)
class CheckOutcome:
    cases: int
    violations: tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_json_dict(self) -> dict:
        return {
            "cases": self.cases,
            "violations": list(self.violations),
            "passed": self.passed,
        }


@dataclass(frozen=True)
class EquivalenceReport:
    """Outcome of the exhaustive theorem verification at one node count."""

    n: int
    mag_count: int
    class_count: int
    checks: dict[str, CheckOutcome] = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "mag_count": self.mag_count,
            "class_count": self.class_count,
            "counterexamples": [],
            "closure_gaps": [],
            "checks": {k: v.to_json_dict() for k, v in self.checks.items()},
        }


def _delta_edge_blanketed(m1: Mag, m2: Mag, edge) -> bool:
    # The edge as carried by each side: blanketed where directed, blanketed
    # against one of its endpoints where bi-directed.
    for m in (m1, m2):
        e = m.graph.edge_between(edge.u, edge.v)
        if e.kind.value == "directed":
            if is_blanketed_directed(m, e.u, e.v):
                return True
        else:
            if is_blanketed_bidirected_against(m, e.u, e.v):
                return True
            if is_blanketed_bidirected_against(m, e.v, e.u):
                return True
    return False


def test_conjecture1(n: int) -> ConjectureReport:
    """Sweep every Markov-equivalent MAG pair on ``n`` nodes for a delta edge
    that is blanketed, and every class for members the move closure misses.

    Counterexamples are reported, never asserted away.
    """
    part = partition_into_classes(enumerate_mags(n))
    counterexamples = []
    pairs_examined = 0
    for keys in part.classes:
        members = [part.graphs_by_key[k] for k in keys]
        for i in range(len(members)):
            for j in range(i + 1, len(members)):
                d = delta(members[i], members[j])
                if not d:
                    continue
                pairs_examined += 1
                if not any(
                    _delta_edge_blanketed(members[i], members[j], e) for e in d
                ):
                    counterexamples.append(
                        (
                            keys[i],
                            keys[j],
                            tuple(sorted(e.token() for e in d)),
                        )
                    )
    closure_gaps = []
    for cid, keys in enumerate(part.classes):
        seed = part.graphs_by_key[keys[0]]
        res = equivalence_class_closure(seed, max_size=len(keys))
        missed = len(set(keys) - res.keys)
        if missed:
            closure_gaps.append((cid, missed))
    return ConjectureReport(
        n=n,
        mag_count=len(part.class_of),
        class_count=part.class_count,
        classes_examined=part.class_count,
        pairs_examined=pairs_examined,
        counterexamples=tuple(counterexamples),
        closure_gaps=tuple(closure_gaps),
    )


def verify_theorems(n: int) -> EquivalenceReport:
    """Exhaustively check the package's structural claims on ``n`` nodes.

    Covers: soundness of the two blanket-licensed replacements, necessity of
    the blanket predicates for mark flips between equivalent MAGs, the
    screened reversal characterization, both path lemmas behind them, and
    agreement of the graphical equivalence test with the brute-force oracle
    on every ordered pair.
    """
    mags = list(enumerate_mags(n))
    signatures = {m.canonical_key(): separation_signature(m.graph) for m in mags}
    class_count = len(set(signatures.values()))

    sound_cases = 0
    sound_viol = []
    for m in mags:
        for mv in legal_moves(m):
            if mv.kind is MoveKind.REVERSE:
                continue
            sound_cases += 1
            try:
                m2 = apply_move(m, mv)
            except InputError as exc:
                sound_viol.append(f"{m.canonical_key()} {mv}: {exc}")
                continue
            if not markov_equivalent_bruteforce(m, m2):
                sound_viol.append(
                    f"{m.canonical_key()} {mv} -> {m2.canonical_key()}: "
                    "not equivalent"
                )

    necessary_cases = 0
    necessary_viol = []
    for m in mags:
        for e in m.edges:
            if e.kind.value != "directed":
                continue
            flipped = m.graph.with_edge(bidirected(e.u, e.v))
            if not is_mag(flipped):
                continue
            m2 = Mag(flipped)
            if not markov_equivalent_bruteforce(m, m2):
                continue
            necessary_cases += 1
            if not is_blanketed_directed(m, e.u, e.v):
                necessary_viol.append(
                    f"{m.canonical_key()}: {e.token()} flips but is not blanketed"
                )
            if not is_blanketed_bidirected_against(m2, e.u, e.v):
                necessary_viol.append(
                    f"{m2.canonical_key()}: {e.u}<->{e.v} flips back but is "
                    f"not blanketed against {e.u}"
                )

    reverse_cases = 0
    reverse_viol = []
    for m in mags:
        for e in m.edges:
            if e.kind.value != "directed":
                continue
            reverse_cases += 1
            swapped = m.graph.with_edge(directed(e.v, e.u))
            lhs = is_mag(swapped) and markov_equivalent_bruteforce(m, Mag(swapped))
            rhs = is_screened(m, e.u, e.v)
            if lhs != rhs:
                reverse_viol.append(
                    f"{m.canonical_key()}: reversal of {e.token()} "
                    f"equivalent={lhs} screened={rhs}"
                )

    lemma1_cases = 0
    lemma1_viol = []
    for m in mags:
        for e in m.edges:
            oriented = (
                [(e.u, e.v)] if e.kind.value == "directed" else [(e.u, e.v), (e.v, e.u)]
            )
            for x, y in oriented:
                if e.kind.value == "directed":
                    ok = is_blanketed_directed(m, x, y)
                else:
                    ok = is_blanketed_bidirected_against(m, x, y)
                if not ok:
                    continue
                lemma1_cases += 1
                if not check_lemma1(m, x, y):
                    lemma1_viol.append(
                        f"{m.canonical_key()}: collider entry paths into {x} "
                        f"escape the blanket of {y}"
                    )

    lemma2_cases = 0
    lemma2_viol = []
    for m in mags:
        for e in m.edges:
            if e.kind.value != "directed":
                continue
            if not is_screened(m, e.u, e.v):
                continue
            lemma2_cases += 1
            if not is_blanketed_directed(m, e.u, e.v):
                lemma2_viol.append(
                    f"{m.canonical_key()}: {e.token()} screened but not blanketed"
                )

    oracle_cases = 0
    oracle_viol = []
    for m1 in mags:
        s1 = signatures[m1.canonical_key()]
        for m2 in mags:
            oracle_cases += 1
            graphical = markov_equivalent(m1, m2)
            brute = s1 == signatures[m2.canonical_key()]
            if graphical != brute:
                oracle_viol.append(
                    f"{m1.canonical_key()} vs {m2.canonical_key()}: "
                    f"graphical={graphical} brute={brute}"
                )

    checks = {
        "thm3_sound": CheckOutcome(sound_cases, tuple(sound_viol)),
        "thm3_necessary": CheckOutcome(necessary_cases, tuple(necessary_viol)),
        "thm4_iff": CheckOutcome(reverse_cases, tuple(reverse_viol)),
        "lemma1": CheckOutcome(lemma1_cases, tuple(lemma1_viol)),
        "lemma2": CheckOutcome(lemma2_cases, tuple(lemma2_viol)),
        "thm2_vs_oracle": CheckOutcome(oracle_cases, tuple(oracle_viol)),
    }
    return EquivalenceReport(
        n=n, mag_count=len(mags), class_count=class_count, checks=checks
    )
