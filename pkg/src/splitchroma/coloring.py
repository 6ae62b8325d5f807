"""Edge colorings: data model, verification and simple constructive colorers."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .errors import PreconditionError
from .graph import Edge, Graph, edge_key


class EdgeColoring:
    """Map from unordered vertex pairs to colors ``1..palette_size``.

    Properness is not enforced here; partial and conflicting states are
    legal and are judged by :func:`verify_proper`.
    """

    def __init__(self, assignment: Mapping[tuple[int, int], int] | None = None, palette_size: int = 0):
        self._colors: dict[Edge, int] = {}
        self.palette_size = palette_size
        for (u, v), c in (assignment or {}).items():
            self[u, v] = c

    def __getitem__(self, e: tuple[int, int]) -> int:
        return self._colors[edge_key(*e)]

    def __setitem__(self, e: tuple[int, int], color: int) -> None:
        if color < 1:
            raise ValueError(f"colors are 1-based, got {color}")
        self._colors[edge_key(*e)] = color

    def __delitem__(self, e: tuple[int, int]) -> None:
        del self._colors[edge_key(*e)]

    def __contains__(self, e: object) -> bool:
        return isinstance(e, tuple) and len(e) == 2 and edge_key(*e) in self._colors

    def __len__(self) -> int:
        return len(self._colors)

    def __iter__(self) -> Iterator[Edge]:
        return iter(self._colors)

    def get(self, e: tuple[int, int], default: int | None = None) -> int | None:
        return self._colors.get(edge_key(*e), default)

    def items(self):
        return self._colors.items()

    def copy(self) -> "EdgeColoring":
        c = EdgeColoring(palette_size=self.palette_size)
        c._colors = dict(self._colors)
        return c

    def restrict(self, edges: Iterable[tuple[int, int]]) -> "EdgeColoring":
        c = EdgeColoring(palette_size=self.palette_size)
        for e in edges:
            c[e] = self[e]
        return c

    def colors_used(self) -> set[int]:
        return set(self._colors.values())

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, EdgeColoring)
            and self._colors == other._colors
            and self.palette_size == other.palette_size
        )

    def __repr__(self) -> str:
        return f"EdgeColoring({len(self._colors)} edges, palette={self.palette_size})"


@dataclass(frozen=True)
class Violation:
    kind: str  # "uncolored" | "conflict" | "not-an-edge" | "out-of-palette"
    vertex: int | None
    edges: tuple[Edge, ...]
    color: int | None = None

    def __str__(self) -> str:
        edges = ", ".join(f"{u}-{v}" for u, v in self.edges)
        if self.kind == "conflict":
            return f"conflict at vertex {self.vertex}: edges {edges} share color {self.color}"
        return f"{self.kind} edge {edges}"


def verify_proper(g: Graph, c: EdgeColoring) -> list[Violation]:
    out: list[Violation] = []
    for e in g.edges():
        if e not in c:
            out.append(Violation("uncolored", None, (e,)))
    for e, col in sorted(c.items()):
        if not g.has_edge(*e):
            out.append(Violation("not-an-edge", None, (e,), col))
        elif col > c.palette_size:
            out.append(Violation("out-of-palette", None, (e,), col))
    for v in g.vertices:
        seen: dict[int, list[Edge]] = {}
        for x in sorted(g.neighbors(v)):
            col = c.get((v, x))
            if col is not None:
                seen.setdefault(col, []).append(edge_key(v, x))
        for col, es in sorted(seen.items()):
            if len(es) > 1:
                out.append(Violation("conflict", v, tuple(es), col))
    return out


def colors_at(g: Graph, c: EdgeColoring, v: int) -> list[int]:
    return [col for x in g.neighbors(v) if (col := c.get((v, x))) is not None]


def missing_colors(g: Graph, c: EdgeColoring, k: int | None = None) -> dict[int, set[int]]:
    """Per-vertex sets of palette colors absent on the colored edges at v."""
    k = c.palette_size if k is None else k
    palette = set(range(1, k + 1))
    out = {}
    for v in g.vertices:
        present = colors_at(g, c, v)
        if len(present) != len(set(present)):
            raise ValueError(f"coloring has a conflict at vertex {v}")
        out[v] = palette.difference(present)
    return out


# -- constructive colorers -----------------------------------------------------


def _circle_color(i: int, j: int, m: int) -> int:
    """Round-robin color of pair {i, j} on the odd circle 0..m-1.

    Color classes are the near-perfect matchings ``i + j = 2(c-1) mod m``;
    vertex ``c - 1`` is the one left out of class ``c``.
    """
    return ((i + j) * ((m + 1) // 2)) % m + 1


def color_complete_graph(n: int) -> EdgeColoring:
    """Proper coloring of K_n by the circle method.

    Uses n - 1 colors for even n and n colors for odd n.  For odd n vertex v
    misses exactly color v + 1.
    """
    if n < 1:
        raise PreconditionError("n must be positive")
    c = EdgeColoring(palette_size=n - 1 if n % 2 == 0 else n)
    m = n if n % 2 else n - 1
    for i in range(m):
        for j in range(i + 1, m):
            c[i, j] = _circle_color(i, j, m)
    if n % 2 == 0:
        hub = n - 1
        for v in range(m):
            c[v, hub] = v + 1
    return c


def color_universal_even(g: Graph) -> EdgeColoring:
    """Delta-coloring of an even-order graph with a universal vertex.

    The graph sits inside K_n, whose n - 1 = Delta colors restrict to it.
    """
    if not g.has_universal_vertex():
        raise PreconditionError("graph has no universal vertex")
    if g.n % 2:
        raise PreconditionError("graph has odd order")
    index = {v: i for i, v in enumerate(g.vertices)}
    full = color_complete_graph(g.n)
    c = EdgeColoring(palette_size=g.n - 1)
    for u, v in g.edges():
        c[u, v] = full[index[u], index[v]]
    return c


def fallback_delta_plus_one(g: Graph) -> EdgeColoring:
    """(Delta+1)-edge-coloring by the Misra-Gries fan rotation algorithm."""
    k = g.max_degree + 1 if g.m else 0
    c = EdgeColoring(palette_size=k)
    at: dict[int, dict[int, int]] = {v: {} for v in g.vertices}  # color -> neighbour

    def free(v: int) -> int:
        return next(col for col in range(1, k + 1) if col not in at[v])

    def uncolor(a: int, b: int) -> None:
        old = c.get((a, b))
        if old is not None:
            del at[a][old]
            del at[b][old]
            del c[a, b]

    def paint(a: int, b: int, col: int) -> None:
        uncolor(a, b)
        c[a, b] = col
        at[a][col] = b
        at[b][col] = a

    for x, f0 in g.edges():
        fan = [f0]
        in_fan = {f0}
        while True:
            last = fan[-1]
            nxt = next(
                (y for col, y in sorted(at[x].items()) if col not in at[last] and y not in in_fan),
                None,
            )
            if nxt is None:
                break
            fan.append(nxt)
            in_fan.add(nxt)
        cx = free(x)
        d = free(fan[-1])
        if cx != d:
            # invert the d/cx path leaving x, after which d is free at x
            path = []
            v, col = x, d
            while col in at[v]:
                y = at[v][col]
                path.append((v, y, col))
                v = y
                col = cx if col == d else d
            for a, b, _ in path:
                uncolor(a, b)
            for a, b, col in path:
                paint(a, b, cx if col == d else d)
        idx = 0
        while d in at[fan[idx]]:
            idx += 1
        shifted = [c[x, fan[i + 1]] for i in range(idx)] + [d]
        for y in fan[: idx + 1]:
            uncolor(x, y)
        for y, col in zip(fan, shifted):
            paint(x, y, col)
    return c


def extend_to_pendants(g: Graph, c: EdgeColoring, removed_edges: Iterable[tuple[int, int]]) -> EdgeColoring:
    """Color pendant edges, replayed in reverse removal order, greedily.

    Each edge takes the smallest color free at both ends.  The pendant end
    has no colored edge yet, so this is the smallest color missing at the
    anchor, and one exists whenever the palette is at least Delta(g).
    """
    k = max(c.palette_size, g.max_degree)
    out = c.copy()
    out.palette_size = k
    used: dict[int, set[int]] = {}
    for (u, v), col in out.items():
        used.setdefault(u, set()).add(col)
        used.setdefault(v, set()).add(col)
    for p, a in reversed(list(removed_edges)):
        busy = used.get(a, set()) | used.get(p, set())
        col = next((x for x in range(1, k + 1) if x not in busy), None)
        assert col is not None, f"no free color for pendant edge {p}-{a}"
        out[p, a] = col
        used.setdefault(a, set()).add(col)
        used.setdefault(p, set()).add(col)
    return out
