import pytest

from magmoves import Mag, MixedGraph, bidirected, directed, enumerate_mags


@pytest.fixture
def g_edge():
    # X -> Y
    return MixedGraph(2, [directed(0, 1)], labels=("X", "Y"))


@pytest.fixture
def g_chain():
    # X -> Z -> Y
    return MixedGraph(3, [directed(0, 1), directed(1, 2)], labels=("X", "Z", "Y"))


@pytest.fixture
def g_collider():
    # X -> Z <- Y
    return MixedGraph(3, [directed(0, 1), directed(2, 1)], labels=("X", "Z", "Y"))


@pytest.fixture
def g_bicollider():
    # X <-> Z <-> Y
    return MixedGraph(3, [bidirected(0, 1), bidirected(1, 2)], labels=("X", "Z", "Y"))


@pytest.fixture
def g_triangle():
    # Z -> X, Z -> Y, X -> Y (a complete DAG)
    return MixedGraph(
        3, [directed(0, 1), directed(0, 2), directed(1, 2)], labels=("Z", "X", "Y")
    )


@pytest.fixture
def g_nonmaximal():
    # a <-> b <-> c <-> d plus b -> d and c -> a: ancestral, but the
    # non-adjacent pair (a, d) is joined by an inducing path
    return MixedGraph(
        4,
        [
            bidirected(0, 1),
            bidirected(1, 2),
            bidirected(2, 3),
            directed(1, 3),
            directed(2, 0),
        ],
        labels=("a", "b", "c", "d"),
    )


@pytest.fixture
def g_discpath():
    # W -> Z, Z <-> X, Z -> Y, X -> Y: (W, Z, X, Y) discriminates X
    return MixedGraph(
        4,
        [directed(0, 1), bidirected(1, 2), directed(1, 3), directed(2, 3)],
        labels=("W", "Z", "X", "Y"),
    )


@pytest.fixture
def g_unshared_parent():
    # Z -> X -> Y with Z, Y non-adjacent
    return MixedGraph(3, [directed(0, 1), directed(1, 2)], labels=("Z", "X", "Y"))


@pytest.fixture(scope="session")
def mags_by_n():
    return {n: list(enumerate_mags(n)) for n in (1, 2, 3, 4)}


def mag(*edges, n, labels=None):
    return Mag(MixedGraph(n, edges, labels=labels))
