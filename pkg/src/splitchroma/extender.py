"""Extend the saturated-core coloring to a Delta-coloring of the whole graph.

Edges from outside vertices ``w`` into the clique borrow the colors of the
non-edges that saturation added at their clique endpoint (the "dashed"
partners), or that endpoint's one missing color.  Clique vertices stay proper
by construction; clashes can only appear at ``w`` and are removed slot by slot
along the color trail, each step exchanging the color of ``w x_i`` with a
donor edge ``x_i x'_j`` whose far end misses the clashing color.
"""

from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass, field

from .coloring import EdgeColoring, verify_proper
from .errors import LemmaViolation, OutOfFamilyError, PreconditionError, SwapBoundExceeded
from .graph import Graph, SplitPartition, recognize_split
from .saturation import (
    Anchor,
    SaturationRecord,
    build_saturated,
    induce_H,
    missing_color_violations,
    plantholt_color,
    select_anchor,
)
from .stretch import stretch_index_split


def strict_mode(strict: bool | None = None) -> bool:
    if strict is not None:
        return strict
    return os.environ.get("SPLITCHROMA_ASSERT", "").lower() == "strict"


@dataclass
class Slot:
    x: int
    partner: int | None  # x' with x x' an added (dashed) edge, None for a missing color


@dataclass
class ColorTrail:
    w: int
    slots: list[Slot]
    color_groups: list[tuple[int, int]]  # (color, multiplicity), conflicting colors first


@dataclass(frozen=True)
class SwapEntry:
    step: int
    w: int
    slot: int  # 1-based trail position i
    donor_slot: int  # 1-based j*
    edges: tuple[tuple[int, int], tuple[int, int]]
    colors: tuple[int, int]  # (color leaving w x_i, color arriving at w x_i)

    def as_dict(self) -> dict:
        return {
            "step": self.step,
            "w": self.w,
            "slot": self.slot,
            "donor_slot": self.donor_slot,
            "edges": [list(e) for e in self.edges],
            "colors": list(self.colors),
        }


@dataclass
class ExtensionState:
    g: Graph
    rec: SaturationRecord | None
    coloring: EdgeColoring
    delta: int
    pairing: dict[tuple[int, int], int | None] = field(default_factory=dict)
    counts: dict[int, Counter] = field(default_factory=dict)
    swap_log: list[SwapEntry] = field(default_factory=list)
    swaps_per_slot: dict[int, list[int]] = field(default_factory=dict)
    strict: bool = False

    @classmethod
    def from_coloring(
        cls, g: Graph, coloring: EdgeColoring, pairing: dict[tuple[int, int], int | None], strict: bool = True
    ) -> "ExtensionState":
        """State for a hand-built trail: ``pairing`` maps ``(w, x)`` to ``x'``."""
        state = cls(g=g, rec=None, coloring=EdgeColoring(palette_size=coloring.palette_size),
                    delta=coloring.palette_size, pairing=dict(pairing), strict=strict)
        state.counts = {v: Counter() for v in g.vertices}
        for (u, v), col in coloring.items():
            state._recolor(u, v, col)
        return state

    @property
    def outside(self) -> list[int]:
        if self.rec is None:
            return sorted({w for w, _ in self.pairing})
        return [v for v in self.g.vertices if v not in self.rec.H]

    def missing(self, v: int) -> set[int]:
        cnt = self.counts[v]
        return {col for col in range(1, self.delta + 1) if not cnt[col]}

    def has_conflict(self, v: int) -> bool:
        return any(n > 1 for n in self.counts[v].values())

    def _recolor(self, u: int, v: int, col: int) -> None:
        old = self.coloring.get((u, v))
        if old is not None:
            self.counts[u][old] -= 1
            self.counts[v][old] -= 1
        self.coloring[u, v] = col
        self.counts[u][col] += 1
        self.counts[v][col] += 1

    def check_counts(self) -> None:
        fresh: dict[int, Counter] = {v: Counter() for v in self.g.vertices}
        for (u, v), col in self.coloring.items():
            fresh[u][col] += 1
            fresh[v][col] += 1
        for v in self.g.vertices:
            if +fresh[v] != +self.counts[v]:
                raise LemmaViolation(f"incremental missing-color list at {v} drifted")


def assign_initial(
    g: Graph, rec: SaturationRecord, coloring: EdgeColoring | None = None, strict: bool | None = None
) -> ExtensionState:
    """Color every edge outside H from the saturated coloring.

    For ``w x`` the candidates at ``x`` are, in order: the unique H*-missing
    color of ``x`` when ``d_G(x) = Delta > d_H*(x)``, then the colors of the
    unconsumed added edges ``x x'`` in insertion order.  The first candidate
    still missing at ``w`` is taken, otherwise the first candidate.
    """
    strict = strict_mode(strict)
    base = rec.base_coloring if rec.base_coloring is not None else plantholt_color(rec)
    delta = rec.delta
    H, Hs = rec.H, rec.H_star
    if coloring is None:
        coloring = base.restrict(H.edges())
    coloring = coloring.copy()
    coloring.palette_size = delta
    state = ExtensionState(g=g, rec=rec, coloring=EdgeColoring(palette_size=delta), delta=delta, strict=strict)
    state.counts = {v: Counter() for v in g.vertices}
    for (u, v), col in coloring.items():
        state._recolor(u, v, col)

    pool = {x: list(ps) for x, ps in rec.pairing_pool.items()}
    spare_missing: dict[int, int] = {}
    for x in Hs.vertices:
        if g.degree(x) == delta and Hs.degree(x) == delta - 1:
            (col,) = set(range(1, delta + 1)) - {base[x, y] for y in Hs.neighbors(x)}
            spare_missing[x] = col

    for w in state.outside:
        for x in sorted(g.neighbors(w)):
            if x not in H:
                raise LemmaViolation(f"edge {w}-{x} has both ends outside H")
            cands: list[tuple[int | None, int]] = []
            if x in spare_missing:
                cands.append((None, spare_missing[x]))
            cands.extend((xp, base[x, xp]) for xp in pool[x])
            if not cands:
                raise LemmaViolation(f"no free H*-color left at clique vertex {x} for edge {w}-{x}")
            lw = state.missing(w)
            partner, col = next((cand for cand in cands if cand[1] in lw), cands[0])
            if partner is None:
                del spare_missing[x]
            else:
                pool[x].remove(partner)
            state.pairing[(w, x)] = partner
            state._recolor(w, x, col)
            if state.counts[x][col] > 1:
                raise LemmaViolation(f"clique vertex {x} received color {col} twice")
    return state


def build_color_trail(state: ExtensionState, w: int) -> ColorTrail:
    """Order the edges at ``w`` for conflict resolution.

    Conflicting colors come first, by non-increasing multiplicity then color
    id; inside a color the edge without a dashed partner is rightmost.  The
    non-conflicting edges follow in color order.
    """
    g, c = state.g, state.coloring
    slots = [Slot(x, state.pairing[(w, x)]) for x in sorted(g.neighbors(w))]
    mult = Counter(c[w, s.x] for s in slots)
    groups = sorted(mult.items(), key=lambda cm: (-cm[1], cm[0]))
    ordered: list[Slot] = []
    for col, _ in groups:
        same = [s for s in slots if c[w, s.x] == col]
        same.sort(key=lambda s: (s.partner is None, s.x))
        ordered.extend(same)
    return ColorTrail(w, ordered, groups)


def color_swap(state: ExtensionState, trail: ColorTrail, i: int) -> SwapEntry:
    """Resolve the clash of slot ``i`` (0-based) with one exchange.

    The donor is the leftmost earlier slot ``j`` whose partner ``x'_j`` misses
    the color of ``w x_i``; the colors of ``w x_i`` and ``x_i x'_j`` swap.
    """
    w = trail.w
    c = state.coloring
    xi = trail.slots[i].x
    alpha = c[w, xi]
    jstar = None
    for j in range(i):
        xp = trail.slots[j].partner
        if xp is not None and not state.counts[xp][alpha]:
            jstar = j
            break
    if jstar is None:
        raise LemmaViolation(f"no earlier trail partner misses color {alpha} (w={w}, slot {i + 1})")
    xp = trail.slots[jstar].partner
    if not state.g.has_edge(xi, xp):
        raise LemmaViolation(
            f"donor edge {xi}-{xp} is not in G (w={w}, slot {i + 1}, donor slot {jstar + 1})"
        )
    beta = c[xi, xp]
    state._recolor(w, xi, beta)
    state._recolor(xi, xp, alpha)
    entry = SwapEntry(len(state.swap_log) + 1, w, i + 1, jstar + 1, ((w, xi), (xi, xp)), (alpha, beta))
    state.swap_log.append(entry)
    if state.strict:
        state.check_counts()
        for v in (xi, xp):
            if state.has_conflict(v):
                raise LemmaViolation(f"swap created a conflict at {v}")
    return entry


def resolve_conflicts(state: ExtensionState, w: int, trail: ColorTrail | None = None) -> list[int]:
    """Sweep the trail of ``w`` left to right; return swap counts per slot."""
    if not state.has_conflict(w):
        state.swaps_per_slot[w] = []
        return []
    trail = build_color_trail(state, w) if trail is None else trail
    c = state.coloring
    counts = [0] * len(trail.slots)
    for i in range(1, len(trail.slots)):
        xi = trail.slots[i].x
        while any(c[w, xi] == c[w, trail.slots[j].x] for j in range(i)):
            if counts[i] >= i:
                raise SwapBoundExceeded(f"slot {i + 1} at w={w} needs more than {i} swaps")
            color_swap(state, trail, i)
            counts[i] += 1
    if state.has_conflict(w):
        raise LemmaViolation(f"conflict left at w={w}")
    state.swaps_per_slot[w] = counts
    return counts


@dataclass
class Sigma3Result:
    coloring: EdgeColoring
    anchor: Anchor
    record: SaturationRecord
    state: ExtensionState


def extend_sigma3(g: Graph, p: SplitPartition | None = None, strict: bool | None = None) -> Sigma3Result:
    """Run the full pipeline and keep the intermediate artefacts."""
    strict = strict_mode(strict)
    p = recognize_split(g) if p is None else p
    if p is None:
        raise PreconditionError("graph is not split")
    if any(g.degree(v) < 2 for v in g.vertices):
        raise PreconditionError("graph has pendant or isolated vertices")
    if stretch_index_split(g, p).sigma != 3:
        raise PreconditionError("graph does not have stretch index 3")
    if g.max_degree % 2:
        raise PreconditionError("maximum degree is odd")
    anchor = select_anchor(g, p)
    if anchor is None:
        raise OutOfFamilyError("no independent vertex of degree <= (n-1)/2 is adjacent to a Delta-vertex")
    if anchor.hypothesis_mismatch:
        raise OutOfFamilyError(
            f"anchor s1={anchor.s1} has degree {g.degree(anchor.s1)} > Delta/2; saturation is infeasible"
        )
    H = induce_H(g, anchor)
    rec = build_saturated(H, anchor.s1)
    plantholt_color(rec)
    if strict:
        bad = missing_color_violations(rec)
        if bad:
            raise LemmaViolation("; ".join(bad))
    state = assign_initial(g, rec, strict=strict)
    for w in state.outside:
        resolve_conflicts(state, w)
    problems = verify_proper(g, state.coloring)
    if problems:
        raise LemmaViolation(f"final coloring is not proper: {problems[:3]}")
    return Sigma3Result(state.coloring, anchor, rec, state)


def color_sigma3_split(g: Graph, p: SplitPartition | None = None, strict: bool | None = None) -> EdgeColoring:
    """Delta-edge-coloring of a stretch-3 split graph in the Class 1 family."""
    return extend_sigma3(g, p, strict).coloring
