import itertools
import sys

import pytest
from hypothesis import strategies as st

from splitchroma import EdgeColoring, Graph


def split_from(q: int, attach: list[list[int]]) -> Graph:
    """Clique on 0..q-1 plus one independent vertex per entry of ``attach``."""
    edges = list(itertools.combinations(range(q), 2))
    for k, nbrs in enumerate(attach):
        edges.extend((x, q + k) for x in nbrs)
    return Graph.from_edges(q + len(attach), edges)


# clique 0..3, s1=4 ~ {0,1}, s2=5 ~ {2,3}
G6 = split_from(4, [[0, 1], [2, 3]])
# K5 plus 5 ~ {0,1}, 6 ~ {1,2}, 7 ~ {3,4}
G8 = split_from(5, [[0, 1], [1, 2], [3, 4]])
# K6 with 6 ~ {0,1}, 7 ~ {2,3,4,5}: in the sigma-3 anchor family but neighborhood-overfull
NBHD_OVERFULL = split_from(6, [[0, 1], [2, 3, 4, 5]])
# smallest case where the leftmost donor edge is absent from G
MISSING_DONOR = split_from(4, [[2, 3], [0, 1], [1, 2, 3], [1, 2]])
# Class 1 graph (chi' = Delta = 6) on which the deterministic sweep stalls
STALL_CLASS1 = Graph.from_edges(8, [
    (0, 1), (0, 2), (0, 3), (0, 4), (0, 6), (1, 2), (1, 3), (1, 4), (1, 7),
    (2, 3), (2, 4), (2, 5), (3, 5), (3, 6), (3, 7),
])


def wheel(k: int) -> Graph:
    """Hub 0 joined to a k-cycle on 1..k."""
    edges = [(0, i) for i in range(1, k + 1)]
    edges += [(i, i % k + 1) for i in range(1, k + 1)]
    return Graph.from_edges(k + 1, edges)


def bistar(a: int, b: int) -> Graph:
    edges = [(0, 1)] + [(0, 2 + i) for i in range(a)] + [(1, 2 + a + i) for i in range(b)]
    return Graph.from_edges(2 + a + b, edges)


def trail_fixture():
    """Outside vertex 0 with five clique neighbors 1..5 and partners 6..10.

    Colors at 0 have multiplicities (3, 2); the sweep needs 1, 2, 2, 3 swaps.
    """
    cols = {
        (0, 1): 1, (0, 2): 1, (0, 3): 1, (0, 4): 2, (0, 5): 2,
        (2, 6): 2, (3, 7): 2, (3, 6): 3, (4, 7): 3, (4, 6): 4,
        (5, 9): 3, (5, 7): 4, (5, 6): 5, (1, 8): 2, (1, 10): 3,
    }
    g = Graph.from_edges(11, list(cols))
    c = EdgeColoring(cols, palette_size=5)
    pairing = {(0, i): i + 5 for i in range(1, 6)}
    return g, c, pairing


@pytest.fixture
def g6():
    return G6


@pytest.fixture
def g8():
    return G8


@st.composite
def graphs(draw, max_n: int = 8):
    n = draw(st.integers(1, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, keep in zip(pairs, mask) if keep])


@st.composite
def split_graphs(draw, max_q: int = 6, max_s: int = 5, connected: bool = True):
    q = draw(st.integers(2 if connected else 1, max_q))
    s = draw(st.integers(0, max_s))
    lo = 1 if connected else 0
    attach = [
        draw(st.lists(st.integers(0, q - 1), min_size=lo, max_size=q, unique=True))
        for _ in range(s)
    ]
    return split_from(q, attach)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
