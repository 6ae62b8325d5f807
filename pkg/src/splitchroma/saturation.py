"""Saturated supergraph of the universal-vertex core and its Delta-coloring."""

from __future__ import annotations

from dataclasses import dataclass, field

from .coloring import EdgeColoring, _circle_color, verify_proper
from .errors import LemmaViolation, PreconditionError
from .graph import Edge, Graph, SplitPartition, edge_key, is_overfull


@dataclass(frozen=True)
class Anchor:
    """A Delta-vertex ``u`` and an independent neighbour ``s1`` of low degree.

    ``strict`` records whether ``d(s1) <= Delta/2``, the bound the saturated
    graph construction actually needs.  Anchors that only meet the looser
    ``d(s1) <= (n-1)/2`` bound are flagged as a hypothesis mismatch.
    """

    delta_vertex: int
    s1: int
    strict: bool = True

    @property
    def hypothesis_mismatch(self) -> bool:
        return not self.strict


@dataclass
class SaturationRecord:
    H: Graph
    H_star: Graph
    s1: int
    delta: int
    added_edges: list[Edge]
    pairing_pool: dict[int, list[int]] = field(default_factory=dict)
    base_coloring: EdgeColoring | None = None

    @property
    def clique(self) -> list[int]:
        return [v for v in self.H_star.vertices if v != self.s1]


def select_anchor(g: Graph, p: SplitPartition) -> Anchor | None:
    """Pick ``(u, s1)``: u a Delta-vertex, s1 in S adjacent to u, d(s1) <= (n-1)/2.

    Candidates meeting the stricter ``d(s1) <= Delta/2`` are preferred; within
    each tier the smallest ``u`` then smallest ``s1`` wins.
    """
    delta = g.max_degree
    if delta % 2:
        raise PreconditionError("anchor selection needs an even maximum degree")
    loose = None
    for u in g.delta_vertices():
        for s in sorted(g.neighbors(u) & p.independent):
            d = g.degree(s)
            if 2 * d > g.n - 1:
                continue
            if 2 * d <= delta:
                return Anchor(u, s, strict=True)
            if loose is None:
                loose = Anchor(u, s, strict=False)
    return loose


def induce_H(g: Graph, anchor: Anchor) -> Graph:
    u = anchor.delta_vertex
    H = g.subgraph(g.neighbors(u) | {u})
    delta = g.max_degree
    if H.n != delta + 1 or H.max_degree != delta or H.degree(u) != H.n - 1:
        raise LemmaViolation(f"closed neighbourhood of {u} is not a universal-vertex core")
    if anchor.s1 not in H:
        raise LemmaViolation(f"s1={anchor.s1} is not adjacent to {u}")
    return H


def build_saturated(H: Graph, s1: int) -> SaturationRecord:
    """Complete every vertex but ``s1`` to a clique, then top up ``s1``.

    ``s1`` is joined to the smallest-id non-neighbours until the graph has
    exactly ``Delta * (n-1)/2`` edges, which leaves ``d(s1) = Delta/2``.
    """
    n = H.n
    delta = H.max_degree
    if n % 2 == 0 or delta != n - 1:
        raise PreconditionError("H must have odd order and a universal vertex")
    if is_overfull(H):
        raise PreconditionError("H is overfull, so it is Class 2")
    if 2 * H.degree(s1) > delta:
        raise PreconditionError(f"d(s1)={H.degree(s1)} exceeds Delta/2={delta // 2}")

    clique = [v for v in H.vertices if v != s1]
    added: list[Edge] = []
    for i, a in enumerate(clique):
        for b in clique[i + 1 :]:
            if not H.has_edge(a, b):
                added.append(edge_key(a, b))
    target = delta * (n // 2)
    missing = target - H.m - len(added)
    spare = [x for x in clique if not H.has_edge(s1, x)]
    if missing < 0 or missing > len(spare):
        raise LemmaViolation("saturation edge count is infeasible")
    for x in spare[:missing]:
        added.append(edge_key(s1, x))

    H_star = H.with_edges(added)
    if H_star.m != target:
        raise LemmaViolation(f"|E(H*)|={H_star.m} != {target}")
    pool: dict[int, list[int]] = {v: [] for v in H_star.vertices}
    for a, b in added:
        pool[a].append(b)
        pool[b].append(a)
    return SaturationRecord(H=H, H_star=H_star, s1=s1, delta=delta, added_edges=added, pairing_pool=pool)


def plantholt_color(rec: SaturationRecord) -> EdgeColoring:
    """Proper Delta-coloring of the saturated graph H*.

    H* is a clique K_Delta plus ``s1`` joined to half of it.  Place the
    ``k = Delta/2`` neighbours of ``s1`` at circle positions ``0..k-1`` and the
    others at ``k..Delta-2`` plus the hub, then color the clique with the
    circle method on ``Delta - 1`` colors.  Edge ``s1``-(position 0) takes the
    new color Delta.  Each other neighbour at position ``i`` is matched with
    position ``k-1+i``; these pairs have distinct index sums mod ``Delta-1``,
    hence distinct colors, which move to the ``s1`` edges while the pairs
    themselves switch to color Delta.
    """
    G = rec.H_star
    s1, delta = rec.s1, rec.delta
    k = delta // 2
    nbrs = sorted(G.neighbors(s1))
    others = [v for v in rec.clique if v not in G.neighbors(s1)]
    if len(nbrs) != k or len(others) != k:
        raise LemmaViolation("H* does not have the saturated degree profile")
    order = nbrs + others  # position -> vertex; the last one is the hub
    m = delta - 1
    c = EdgeColoring(palette_size=delta)
    for i in range(m):
        for j in range(i + 1, m):
            c[order[i], order[j]] = _circle_color(i, j, m)
    hub = order[-1]
    for i in range(m):
        c[order[i], hub] = i + 1
    if k:
        c[s1, order[0]] = delta
    for i in range(1, k):
        a, b = order[i], order[k - 1 + i]
        freed = c[a, b]
        c[a, b] = delta
        c[s1, a] = freed
    problems = verify_proper(G, c)
    if problems or len(c.colors_used()) != delta:
        raise LemmaViolation(f"saturated coloring is not a proper Delta-coloring: {problems[:3]}")
    rec.base_coloring = c
    return c


def missing_color_violations(rec: SaturationRecord, c: EdgeColoring | None = None) -> list[str]:
    """Check the missing-color structure of a proper Delta-coloring of H*.

    Each (Delta-1)-vertex misses exactly one color, those colors are pairwise
    distinct, and none of them is missing at ``s1``.
    """
    c = rec.base_coloring if c is None else c
    G, delta = rec.H_star, rec.delta
    palette = set(range(1, delta + 1))

    def missing(v: int) -> set[int]:
        return palette - {c.get((v, x)) for x in G.neighbors(v)}

    out = []
    low = [v for v in rec.clique if G.degree(v) == delta - 1]
    if len(low) != delta // 2:
        out.append(f"expected {delta // 2} vertices of degree Delta-1, found {len(low)}")
    seen: dict[int, int] = {}
    s1_missing = missing(rec.s1)
    for v in low:
        lv = missing(v)
        if len(lv) != 1:
            out.append(f"vertex {v} misses {sorted(lv)}")
            continue
        (col,) = lv
        if col in seen:
            out.append(f"vertices {seen[col]} and {v} both miss color {col}")
        seen[col] = v
        if col in s1_missing:
            out.append(f"color {col} missing at both {v} and s1")
    return out
