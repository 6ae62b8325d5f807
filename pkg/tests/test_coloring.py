import pytest
from hypothesis import given, settings

from conftest import G6, graphs, split_from, wheel
from splitchroma import (
    EdgeColoring,
    Graph,
    PreconditionError,
    color_complete_graph,
    color_universal_even,
    extend_to_pendants,
    fallback_delta_plus_one,
    missing_colors,
    remove_pendants,
    verify_proper,
)


def test_verify_reports_each_kind():
    g = Graph.from_edges(3, [(0, 1), (1, 2)])
    c = EdgeColoring({(0, 1): 1, (1, 2): 1, (0, 2): 2}, palette_size=1)
    kinds = sorted(v.kind for v in verify_proper(g, c))
    assert kinds == ["conflict", "not-an-edge"]
    c = EdgeColoring({(0, 1): 3}, palette_size=2)
    assert sorted(v.kind for v in verify_proper(g, c)) == ["out-of-palette", "uncolored"]


def test_edge_coloring_is_symmetric():
    c = EdgeColoring(palette_size=2)
    c[3, 1] = 2
    assert c[1, 3] == 2 and (3, 1) in c and list(c) == [(1, 3)]
    with pytest.raises(ValueError):
        c[0, 1] = 0


def test_missing_colors():
    g = Graph.from_edges(3, [(0, 1), (1, 2)])
    c = EdgeColoring({(0, 1): 1, (1, 2): 2}, palette_size=3)
    assert missing_colors(g, c) == {0: {2, 3}, 1: {3}, 2: {1, 3}}
    c[1, 2] = 1
    with pytest.raises(ValueError):
        missing_colors(g, c)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 8, 11])
def test_complete_graph(n):
    c = color_complete_graph(n)
    assert verify_proper(Graph.complete(n), c) == []
    assert c.palette_size == (n - 1 if n % 2 == 0 else n)
    if n % 2 and n > 1:
        miss = missing_colors(Graph.complete(n), c)
        assert all(miss[v] == {v + 1} for v in range(n))


def test_complete_graph_rejects_zero():
    with pytest.raises(PreconditionError):
        color_complete_graph(0)


def test_universal_even():
    g = wheel(5)
    c = color_universal_even(g)
    assert c.palette_size == 5 and verify_proper(g, c) == []
    with pytest.raises(PreconditionError):
        color_universal_even(wheel(4))


@given(graphs(max_n=9))
@settings(max_examples=300, deadline=None)
def test_fallback_is_proper(g):
    c = fallback_delta_plus_one(g)
    assert verify_proper(g, c) == []
    assert c.palette_size <= g.max_degree + 1


def test_pendant_extension_keeps_palette():
    g = split_from(4, [[0, 1], [2, 3], [0], [1]])
    pk = remove_pendants(g)
    base = fallback_delta_plus_one(pk.kernel)
    c = extend_to_pendants(g, base, pk.removed_edges)
    assert verify_proper(g, c) == []
    assert c.palette_size == max(base.palette_size, g.max_degree)
    assert c.restrict(pk.kernel.edges()) == base.restrict(pk.kernel.edges())
