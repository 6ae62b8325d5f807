import pytest

from conftest import G6, G8, NBHD_OVERFULL, bistar, split_from, wheel
from splitchroma import (
    DisconnectedGraphError,
    Graph,
    GenParams,
    LemmaViolation,
    NotSplitError,
    chromatic_index_bruteforce,
    classify,
    color_graph,
    random_split_graph,
    verify_proper,
)


@pytest.mark.parametrize(
    "g, klass, reason",
    [
        (bistar(2, 3), "1", "tree"),
        (Graph.complete(4), "1", "universal-even"),
        (Graph.complete(5), "2", "overfull"),
        (split_from(4, [[0, 1]]), "1", "plantholt"),
        (split_from(4, [[0, 1], [2, 3], [0, 2]]), "1", "chen-odd-delta"),
        (G6, "1", "theorem9"),
        (G8, "1", "theorem9"),
        (NBHD_OVERFULL, "2", "overfull"),
    ],
)
def test_classify_routes(g, klass, reason):
    cls = classify(g)
    assert (cls.klass, cls.reason) == (klass, reason)
    if g.m <= 24:
        chi = chromatic_index_bruteforce(g)[0]
        assert chi == g.max_degree + (klass == "2")


def test_pendant_lift():
    # K5 is Class 2, but a pendant at vertex 0 raises Delta above the kernel's
    g = split_from(5, [[0]])
    cls = classify(g)
    assert (cls.klass, cls.reason) == ("1", "pendant")
    assert color_graph(g).palette == g.max_degree


def test_rejections():
    with pytest.raises(NotSplitError):
        classify(wheel(4))
    with pytest.raises(DisconnectedGraphError):
        classify(Graph.from_edges(4, [(0, 1), (0, 2)]))


def test_color_graph_routes_are_proper():
    for seed in range(150):
        g, _ = random_split_graph(GenParams(seed=seed, clique_size=(2, 7), independent_size=(0, 5), s_degree=(1, None)))
        try:
            res = color_graph(g)
        except LemmaViolation:
            # stretch-3 extender stalls are reported, not hidden
            assert classify(g).route == "theorem9"
            continue
        assert verify_proper(g, res.coloring) == []
        assert res.palette <= g.max_degree + 1
        if res.classification.reason in ("tree", "universal-even", "plantholt", "theorem9"):
            assert res.palette == g.max_degree
