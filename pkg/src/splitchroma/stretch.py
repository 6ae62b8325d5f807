"""Stretch index (tree t-spanner admissibility) of split graphs."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import DisconnectedGraphError, PreconditionError, SizeLimitError
from .graph import Graph, SplitPartition, remove_pendants

TREE = "tree"


@dataclass(frozen=True)
class StretchClass:
    sigma: int
    witness: int | str | None = None


def stretch_index_split(g: Graph, p: SplitPartition | None = None) -> StretchClass:
    """Stretch index of a connected split graph.

    Trees have index 1.  Otherwise pendant vertices are stripped (they do not
    change the index) and the remaining split graph has index 2 exactly when
    it has a universal vertex; split graphs never exceed 3.
    """
    if g.n < 2:
        raise PreconditionError("stretch index needs at least two vertices")
    if not g.is_connected():
        raise DisconnectedGraphError("stretch index is only defined for connected graphs")
    if g.m == g.n - 1:
        return StretchClass(1, TREE)
    kernel = remove_pendants(g).kernel
    universal = kernel.universal_vertices()
    if universal:
        return StretchClass(2, universal[0])
    return StretchClass(3)


def _bfs_dist(adj: dict[int, list[int]], src: int) -> dict[int, int]:
    dist = {src: 0}
    q = deque([src])
    while q:
        v = q.popleft()
        for x in adj[v]:
            if x not in dist:
                dist[x] = dist[v] + 1
                q.append(x)
    return dist


def _has_tree_spanner(g: Graph, t: int) -> bool:
    """Exhaustive include/exclude search over spanning trees with pruning.

    Distances inside a forest component never change when later edges merge
    components, so a graph edge whose endpoints already share a component at
    tree distance > t kills the branch as soon as the two sides are joined.
    """
    edges = g.edges()
    n = g.n
    forest: dict[int, list[int]] = {v: [] for v in g.vertices}
    comp = {v: v for v in g.vertices}

    def find(v: int) -> int:
        while comp[v] != v:
            v = comp[v]
        return v

    def merge_ok(u: int, v: int) -> bool:
        du = _bfs_dist(forest, u)
        dv = _bfs_dist(forest, v)
        for a, da in du.items():
            for x in g.neighbors(a):
                db = dv.get(x)
                if db is not None and da + 1 + db > t:
                    return False
        return True

    def rec(i: int, used: int) -> bool:
        if used == n - 1:
            return True
        if len(edges) - i < n - 1 - used:
            return False
        u, v = edges[i]
        ru, rv = find(u), find(v)
        if ru != rv and merge_ok(u, v):
            forest[u].append(v)
            forest[v].append(u)
            comp[rv] = ru
            if rec(i + 1, used + 1):
                return True
            comp[rv] = rv
            forest[u].pop()
            forest[v].pop()
        return rec(i + 1, used)

    return rec(0, 0)


def stretch_index_oracle(g: Graph, limit: int = 10) -> int:
    """Exact stretch index by exhaustive spanning-tree search (small graphs)."""
    if g.n > limit:
        raise SizeLimitError(f"oracle limited to {limit} vertices, got {g.n}")
    if g.n == 0 or not g.is_connected():
        raise DisconnectedGraphError("stretch index is only defined for connected graphs")
    if g.m == g.n - 1:
        return 1
    for t in range(2, g.n):
        if _has_tree_spanner(g, t):
            return t
    raise AssertionError("every spanning tree is an (n-1)-spanner")
