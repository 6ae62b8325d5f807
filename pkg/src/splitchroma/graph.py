"""Simple undirected graphs, split recognition and overfullness tests."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .errors import PreconditionError

Edge = tuple[int, int]


def edge_key(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple graph stored as adjacency sets.

    Vertices are integers.  Graphs built with :meth:`from_edges` use the dense
    labels ``0..n-1``; induced subgraphs keep the ids of their parent so that
    colorings can move between the two without relabelling.
    """

    __slots__ = ("_adj", "_vertices", "_m", "_hash")

    def __init__(self, adjacency: Mapping[int, Iterable[int]]):
        adj: dict[int, frozenset[int]] = {}
        for v, nbrs in adjacency.items():
            adj[int(v)] = frozenset(int(x) for x in nbrs)
        for v, nbrs in adj.items():
            if v in nbrs:
                raise ValueError(f"self-loop at vertex {v}")
            for x in nbrs:
                if x not in adj or v not in adj[x]:
                    raise ValueError(f"adjacency is not symmetric on {{{v}, {x}}}")
        self._adj = adj
        self._vertices = tuple(sorted(adj))
        self._m = sum(len(n) for n in adj.values()) // 2
        self._hash = None

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj: dict[int, set[int]] = {v: set() for v in range(n)}
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if u not in adj or v not in adj:
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if v in adj[u]:
                raise ValueError(f"duplicate edge ({u}, {v})")
            adj[u].add(v)
            adj[v].add(u)
        return cls(adj)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls({v: [x for x in range(n) if x != v] for v in range(n)})

    # -- basic queries -----------------------------------------------------
    @property
    def vertices(self) -> tuple[int, ...]:
        return self._vertices

    @property
    def n(self) -> int:
        return len(self._vertices)

    @property
    def m(self) -> int:
        return self._m

    edge_count = m

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        nbrs = self._adj.get(u)
        return nbrs is not None and v in nbrs

    def __contains__(self, v: object) -> bool:
        return v in self._adj

    def edges(self) -> list[Edge]:
        return [(u, v) for u in self._vertices for v in sorted(self._adj[u]) if u < v]

    @property
    def max_degree(self) -> int:
        return max((len(n) for n in self._adj.values()), default=0)

    @property
    def min_degree(self) -> int:
        return min((len(n) for n in self._adj.values()), default=0)

    def delta_vertices(self) -> list[int]:
        d = self.max_degree
        return [v for v in self._vertices if len(self._adj[v]) == d]

    def universal_vertices(self) -> list[int]:
        return [v for v in self._vertices if len(self._adj[v]) == self.n - 1]

    def has_universal_vertex(self) -> bool:
        return self.n > 0 and self.max_degree == self.n - 1

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        start = self._vertices[0]
        seen = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for x in self._adj[v]:
                if x not in seen:
                    seen.add(x)
                    stack.append(x)
        return len(seen) == self.n

    def is_tree(self) -> bool:
        return self.n > 0 and self.m == self.n - 1 and self.is_connected()

    # -- derived graphs ----------------------------------------------------
    def subgraph(self, vertices: Iterable[int]) -> "Graph":
        keep = set(vertices)
        return Graph({v: self._adj[v] & keep for v in keep})

    def with_edges(self, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = {v: set(n) for v, n in self._adj.items()}
        for u, v in edges:
            if v in adj[u]:
                raise ValueError(f"edge ({u}, {v}) already present")
            adj[u].add(v)
            adj[v].add(u)
        return Graph(adj)

    def relabel(self) -> tuple["Graph", list[int]]:
        """Dense copy on ``0..n-1``; the list maps new ids back to old ids."""
        order = list(self._vertices)
        index = {v: i for i, v in enumerate(order)}
        g = Graph({index[v]: [index[x] for x in self._adj[v]] for v in order})
        return g, order

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self._adj == other._adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset((v, n) for v, n in self._adj.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


# -- split graphs --------------------------------------------------------------


@dataclass(frozen=True)
class SplitPartition:
    clique: frozenset[int]
    independent: frozenset[int]

    def check(self, g: Graph) -> list[str]:
        """Return the list of broken partition invariants (empty if valid)."""
        problems = []
        if self.clique | self.independent != set(g.vertices):
            problems.append("partition does not cover V")
        if self.clique & self.independent:
            problems.append("clique and independent set overlap")
        for u in self.clique:
            if not (self.clique - {u}) <= g.neighbors(u):
                problems.append(f"clique vertex {u} misses a clique neighbour")
        for s in self.independent:
            if g.neighbors(s) & self.independent:
                problems.append(f"independent vertex {s} has an independent neighbour")
            if self.clique and self.clique <= g.neighbors(s):
                problems.append(f"independent vertex {s} is adjacent to all of Q")
        return problems


def recognize_split(g: Graph) -> SplitPartition | None:
    """Split partition with a maximal clique, or ``None`` if ``g`` is not split.

    Uses the Hammer-Simeone degree-sequence test: with degrees sorted in
    non-increasing order and ``m = max{i : d_i >= i - 1}``, ``g`` is split iff
    ``sum_{i<=m} d_i == m(m-1) + sum_{i>m} d_i``, and the first ``m`` vertices
    then form a clique.
    """
    if g.n == 0:
        return SplitPartition(frozenset(), frozenset())
    order = sorted(g.vertices, key=lambda v: (-g.degree(v), v))
    degs = [g.degree(v) for v in order]
    m = max(i for i in range(1, len(degs) + 1) if degs[i - 1] >= i - 1)
    if sum(degs[:m]) != m * (m - 1) + sum(degs[m:]):
        return None
    clique = set(order[:m])
    independent = set(order[m:])
    promoted = True
    while promoted:
        promoted = False
        for s in sorted(independent):
            if clique <= g.neighbors(s):
                clique.add(s)
                independent.discard(s)
                promoted = True
                break
    part = SplitPartition(frozenset(clique), frozenset(independent))
    assert not part.check(g), part.check(g)
    return part


# -- pendant removal -----------------------------------------------------------


@dataclass(frozen=True)
class PendantKernel:
    """Degree->=2 core left after repeatedly deleting degree-1 vertices.

    ``kernel`` keeps the original vertex ids; ``vertex_map`` lists them in
    order so that ``kernel.relabel()`` ids can be translated back.
    """

    kernel: Graph
    removed_edges: list[Edge] = field(default_factory=list)

    @property
    def vertex_map(self) -> tuple[int, ...]:
        return self.kernel.vertices

    def replay(self) -> Graph:
        adj = {v: set(self.kernel.neighbors(v)) for v in self.kernel.vertices}
        for p, a in reversed(self.removed_edges):
            adj.setdefault(p, set()).add(a)
            adj.setdefault(a, set()).add(p)
        return Graph(adj)


def remove_pendants(g: Graph) -> PendantKernel:
    adj = {v: set(g.neighbors(v)) for v in g.vertices}
    removed: list[Edge] = []
    queue = sorted(v for v in adj if len(adj[v]) == 1)
    while queue:
        p = queue.pop(0)
        if p not in adj or len(adj[p]) != 1:
            continue
        (a,) = adj.pop(p)
        adj[a].discard(p)
        removed.append((p, a))
        if len(adj[a]) == 1:
            queue.append(a)
    return PendantKernel(Graph(adj), removed)


# -- overfullness ----------------------------------------------------------------


def is_overfull(g: Graph) -> bool:
    return g.m > g.max_degree * (g.n // 2)


def is_neighborhood_overfull(g: Graph) -> bool:
    return any(is_overfull(g.subgraph(g.neighbors(v) | {v})) for v in g.delta_vertices())


def is_subgraph_overfull_universal(g: Graph) -> bool:
    """Subgraph-overfull test for graphs with a universal vertex.

    A subgraph keeping Delta = n - 1 must span every vertex, so ``g`` itself
    has the most edges among the candidates and the test collapses to
    :func:`is_overfull`.
    """
    if not g.has_universal_vertex():
        raise PreconditionError("graph has no universal vertex")
    return is_overfull(g)
