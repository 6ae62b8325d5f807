"""Exact chromatic index by backtracking, and seeded random split graphs."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .coloring import EdgeColoring, verify_proper
from .errors import FilterUnsatisfiableError, SizeLimitError
from .graph import Graph, SplitPartition, recognize_split

FAMILIES = ("any", "sigma3", "theorem9", "even-delta")


def _k_colorable(g: Graph, k: int) -> dict[tuple[int, int], int] | None:
    edges = g.edges()
    if not edges:
        return {}
    verts = g.vertices
    vidx = {v: i for i, v in enumerate(verts)}
    full = (1 << k) - 1
    used = [0] * len(verts)  # bitmask of colors present at each vertex
    color: dict[tuple[int, int], int] = {}

    # colors at one Delta-vertex are all distinct, so fix them up to renaming
    hub = max(verts, key=lambda v: (g.degree(v), -v))
    for col, x in enumerate(sorted(g.neighbors(hub))):
        if col >= k:
            return None
        e = (min(hub, x), max(hub, x))
        color[e] = col
        used[vidx[hub]] |= 1 << col
        used[vidx[x]] |= 1 << col
    rest = [e for e in edges if e not in color]

    def rec(remaining: list[tuple[int, int]]) -> bool:
        if not remaining:
            return True
        # most constrained edge first
        best, best_free, best_n = None, 0, k + 1
        for e in remaining:
            free = full & ~(used[vidx[e[0]]] | used[vidx[e[1]]])
            nfree = bin(free).count("1")
            if nfree < best_n:
                best, best_free, best_n = e, free, nfree
                if nfree == 0:
                    return False
        u, v = best
        iu, iv = vidx[u], vidx[v]
        others = [e for e in remaining if e != best]
        free = best_free
        while free:
            bit = free & -free
            free ^= bit
            used[iu] |= bit
            used[iv] |= bit
            color[best] = bit.bit_length() - 1
            if rec(others):
                return True
            used[iu] ^= bit
            used[iv] ^= bit
        del color[best]
        return False

    return color if rec(rest) else None


def chromatic_index_bruteforce(g: Graph, limit: int = 24) -> tuple[int, EdgeColoring]:
    """Exact chromatic index; tries Delta colors, then Delta + 1."""
    if g.m > limit:
        raise SizeLimitError(f"oracle limited to {limit} edges, got {g.m}")
    delta = g.max_degree
    for k in (delta, delta + 1):
        found = _k_colorable(g, k)
        if found is not None:
            c = EdgeColoring({e: col + 1 for e, col in found.items()}, palette_size=k)
            assert not verify_proper(g, c)
            return k, c
    raise AssertionError("Vizing's theorem guarantees a (Delta+1)-coloring")


@dataclass(frozen=True)
class GenParams:
    clique_size: tuple[int, int] = (3, 10)
    independent_size: tuple[int, int] = (1, 10)
    s_degree: tuple[int, int | None] = (2, None)  # None: |Q| - 1
    seed: int = 0
    family: str = "any"
    max_tries: int = 10_000


def _in_family(g: Graph, p: SplitPartition, family: str) -> bool:
    from .saturation import select_anchor
    from .stretch import stretch_index_split

    if family == "any":
        return True
    if family == "even-delta":
        return g.max_degree % 2 == 0
    if g.n < 2 or not g.is_connected():
        return False
    if stretch_index_split(g, p).sigma != 3:
        return False
    if family == "sigma3":
        return True
    if any(g.degree(v) < 2 for v in g.vertices) or g.max_degree % 2:
        return False
    anchor = select_anchor(g, p)
    return anchor is not None and anchor.strict


def random_split_graph(params: GenParams) -> tuple[Graph, SplitPartition]:
    """Random split graph: a clique plus independent vertices wired into it.

    Each independent vertex joins a uniformly random subset of the clique
    whose size is drawn from ``s_degree`` (capped at ``|Q| - 1`` so the clique
    stays maximal).  Rejection sampling enforces ``params.family``.
    """
    if params.family not in FAMILIES:
        raise ValueError(f"unknown family {params.family!r}; expected one of {FAMILIES}")
    rng = np.random.default_rng(params.seed)
    qlo, qhi = params.clique_size
    slo, shi = params.independent_size
    dlo, dhi = params.s_degree
    if params.family in ("sigma3", "theorem9"):
        dlo = max(dlo, 2)
    for _ in range(params.max_tries):
        q = int(rng.integers(max(qlo, 1), qhi + 1))
        s = int(rng.integers(slo, shi + 1))
        top = q - 1 if dhi is None else min(dhi, q - 1)
        lo = max(1, dlo)
        if top < lo:
            s = 0
        edges = [(i, j) for i in range(q) for j in range(i + 1, q)]
        for k in range(s):
            d = int(rng.integers(lo, top + 1))
            for x in sorted(rng.choice(q, size=d, replace=False).tolist()):
                edges.append((x, q + k))
        g = Graph.from_edges(q + s, edges)
        p = recognize_split(g)
        assert p is not None
        if _in_family(g, p, params.family):
            return g, p
    raise FilterUnsatisfiableError(
        f"no {params.family!r} graph found in {params.max_tries} tries with {params}"
    )
