import itertools

import pytest
from hypothesis import given, settings

from conftest import G6, G8, graphs, wheel
from splitchroma import (
    FilterUnsatisfiableError,
    GenParams,
    Graph,
    SizeLimitError,
    chromatic_index_bruteforce,
    random_split_graph,
    recognize_split,
    verify_proper,
)
from splitchroma.oracle import FAMILIES, _in_family


def chi_by_product(g: Graph) -> int:
    """Chromatic index by trying every color assignment (tiny graphs only)."""
    edges = g.edges()
    for k in range(g.max_degree, g.max_degree + 2):
        for cols in itertools.product(range(k), repeat=len(edges)):
            seen = set()
            ok = True
            for (u, v), col in zip(edges, cols):
                if (u, col) in seen or (v, col) in seen:
                    ok = False
                    break
                seen.add((u, col))
                seen.add((v, col))
            if ok:
                return k
    raise AssertionError("unreachable")


@given(graphs(max_n=6))
@settings(max_examples=80, deadline=None)
def test_matches_exhaustive_product(g):
    if g.m > 8 or g.m == 0:
        return
    chi, c = chromatic_index_bruteforce(g)
    assert chi == chi_by_product(g)
    assert verify_proper(g, c) == [] and c.palette_size == chi


def test_known_values():
    assert chromatic_index_bruteforce(G6)[0] == 4
    assert chromatic_index_bruteforce(G8)[0] == 6
    assert chromatic_index_bruteforce(Graph.complete(5))[0] == 5
    assert chromatic_index_bruteforce(Graph.complete(6))[0] == 5
    petersen = Graph.from_edges(10, [(i, (i + 1) % 5) for i in range(5)]
                                + [(i, i + 5) for i in range(5)]
                                + [(5 + i, 5 + (i + 2) % 5) for i in range(5)])
    assert chromatic_index_bruteforce(petersen)[0] == 4
    assert chromatic_index_bruteforce(wheel(5))[0] == 5


def test_size_limit():
    with pytest.raises(SizeLimitError):
        chromatic_index_bruteforce(Graph.complete(8))


def test_generator_is_deterministic():
    a = random_split_graph(GenParams(seed=11))
    b = random_split_graph(GenParams(seed=11))
    assert a == b
    assert any(random_split_graph(GenParams(seed=s))[0] != a[0] for s in range(12, 20))


@pytest.mark.parametrize("family", FAMILIES)
def test_generator_families(family):
    for seed in range(20):
        g, p = random_split_graph(GenParams(seed=seed, family=family))
        assert recognize_split(g) is not None and p.check(g) == []
        assert _in_family(g, p, family)


def test_generator_unsatisfiable():
    params = GenParams(clique_size=(2, 2), independent_size=(1, 1), family="sigma3", max_tries=50)
    with pytest.raises(FilterUnsatisfiableError):
        random_split_graph(params)
