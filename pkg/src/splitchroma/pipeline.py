"""Route a split graph to the strongest applicable classification and colorer."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field

from .coloring import (
    EdgeColoring,
    color_universal_even,
    extend_to_pendants,
    fallback_delta_plus_one,
    verify_proper,
)
from .errors import DisconnectedGraphError, LemmaViolation, NotSplitError
from .extender import SwapEntry, extend_sigma3
from .graph import (
    Graph,
    SplitPartition,
    is_neighborhood_overfull,
    is_overfull,
    is_subgraph_overfull_universal,
    recognize_split,
    remove_pendants,
)
from .saturation import Anchor, build_saturated, plantholt_color, select_anchor
from .stretch import stretch_index_split

REASONS = (
    "tree",
    "universal-even",
    "plantholt",
    "chen-odd-delta",
    "almeida-condition",
    "theorem9",
    "overfull",
    "pendant",
    "open-case",
)

# reasons whose coloring route is constructive with exactly Delta colors
CONSTRUCTIVE = {"tree", "universal-even", "plantholt", "theorem9"}


@dataclass
class Classification:
    is_split: bool
    sigma: int | None
    delta: int
    overfull: bool
    neighborhood_overfull: bool
    subgraph_overfull: bool | None
    klass: str  # "1" | "2" | "unknown"
    reason: str
    route: str  # colorer used by color_graph
    kernel_delta: int = 0
    anchor: Anchor | None = None
    notes: list[str] = field(default_factory=list)
    partition: SplitPartition | None = None

    def as_dict(self) -> dict:
        doc = {
            "is_split": self.is_split,
            "sigma": self.sigma,
            "delta": self.delta,
            "kernel_delta": self.kernel_delta,
            "overfull": {
                "overfull": self.overfull,
                "neighborhood_overfull": self.neighborhood_overfull,
                "subgraph_overfull": self.subgraph_overfull,
            },
            "class": self.klass,
            "reason": self.reason,
            "route": self.route,
            "notes": list(self.notes),
        }
        if self.anchor is not None:
            doc["anchor"] = asdict(self.anchor)
        return doc


def _plantholt_s1(k: Graph, p: SplitPartition) -> int | None:
    delta = k.max_degree
    cands = [s for s in p.independent if 2 * k.degree(s) <= delta]
    return min(cands, key=lambda s: (k.degree(s), s)) if cands else None


def _almeida(k: Graph, p: SplitPartition) -> bool:
    lo = math.ceil(len(p.clique) / 2)
    return any(lo <= k.degree(v) and 2 * k.degree(v) <= k.max_degree for v in p.independent)


def _classify_kernel(k: Graph, p: SplitPartition, out: Classification) -> None:
    delta = k.max_degree
    if k.has_universal_vertex():
        out.subgraph_overfull = is_subgraph_overfull_universal(k)
        if k.n % 2 == 0:
            out.klass, out.reason, out.route = "1", "universal-even", "universal-even"
        elif out.subgraph_overfull:
            out.klass, out.reason, out.route = "2", "overfull", "fallback"
        else:
            out.klass, out.reason = "1", "plantholt"
            if _plantholt_s1(k, p) is not None:
                out.route = "plantholt"
            else:
                out.route = "fallback"
                out.notes.append("no independent vertex of degree <= Delta/2 to saturate around")
        return
    if delta % 2:
        out.klass, out.reason, out.route = "1", "chen-odd-delta", "fallback"
        out.notes.append("Class 1 by the odd maximum degree theorem; the fallback may use Delta+1 colors")
        return
    if out.overfull or out.neighborhood_overfull:
        out.klass, out.reason, out.route = "2", "overfull", "fallback"
        return
    anchor = select_anchor(k, p)
    out.anchor = anchor
    if anchor is not None and anchor.strict:
        out.klass, out.reason, out.route = "1", "theorem9", "theorem9"
        return
    if anchor is not None:
        out.notes.append(
            f"hypothesis mismatch: s1={anchor.s1} has (n-1)/2 >= d(s1) > Delta/2, saturation is infeasible"
        )
    if _almeida(k, p):
        out.klass, out.reason, out.route = "1", "almeida-condition", "fallback"
        out.notes.append("Class 1 by the Almeida et al. condition; the fallback may use Delta+1 colors")
        return
    out.klass, out.reason, out.route = "unknown", "open-case", "fallback"


def classify(g: Graph) -> Classification:
    p = recognize_split(g)
    if p is None:
        raise NotSplitError("not a split graph")
    if not g.is_connected():
        raise DisconnectedGraphError("graph is disconnected; the stretch index is undefined")
    out = Classification(
        is_split=True,
        sigma=None,
        delta=g.max_degree,
        overfull=is_overfull(g),
        neighborhood_overfull=is_neighborhood_overfull(g),
        subgraph_overfull=is_subgraph_overfull_universal(g) if g.has_universal_vertex() else None,
        klass="1",
        reason="tree",
        route="tree",
        partition=p,
    )
    if g.n < 2:
        return out
    out.sigma = stretch_index_split(g, p).sigma
    if out.sigma == 1:
        return out
    kernel = remove_pendants(g).kernel
    kp = recognize_split(kernel)
    assert kp is not None
    out.kernel_delta = kernel.max_degree
    sub = Classification(
        is_split=True,
        sigma=out.sigma,
        delta=kernel.max_degree,
        overfull=is_overfull(kernel),
        neighborhood_overfull=is_neighborhood_overfull(kernel),
        subgraph_overfull=None,
        klass="unknown",
        reason="open-case",
        route="fallback",
    )
    _classify_kernel(kernel, kp, sub)
    out.anchor, out.notes, out.route = sub.anchor, sub.notes, sub.route
    if g.max_degree > kernel.max_degree and sub.klass != "1":
        # the kernel fits in Delta(kernel)+1 <= Delta(g) colors
        out.klass, out.reason = "1", "pendant"
    else:
        out.klass, out.reason = sub.klass, sub.reason
    if out.subgraph_overfull is None and sub.subgraph_overfull and g.max_degree == kernel.max_degree:
        out.subgraph_overfull = True
    return out


@dataclass
class ColoringResult:
    coloring: EdgeColoring
    classification: Classification
    route: str
    swap_log: list[SwapEntry] = field(default_factory=list)

    @property
    def palette(self) -> int:
        return self.coloring.palette_size


def color_graph(g: Graph, strict: bool | None = None) -> ColoringResult:
    """Color ``g`` along the route chosen by :func:`classify`.

    The kernel left after pendant removal is colored first, then pendant
    edges are added back greedily.  Lemma violations from the stretch-3
    extension propagate; they are never silently replaced by the fallback.
    """
    cls = classify(g)
    pk = remove_pendants(g)
    kernel = pk.kernel
    route = cls.route
    log: list[SwapEntry] = []
    if kernel.m == 0:
        base = EdgeColoring(palette_size=0)
        route = "tree"
    elif route == "universal-even":
        base = color_universal_even(kernel)
    elif route == "plantholt":
        kp = recognize_split(kernel)
        rec = build_saturated(kernel, _plantholt_s1(kernel, kp))
        base = plantholt_color(rec).restrict(kernel.edges())
    elif route == "theorem9":
        result = extend_sigma3(kernel, recognize_split(kernel), strict=strict)
        base = result.coloring
        log = result.state.swap_log
    else:
        base = fallback_delta_plus_one(kernel)
    c = extend_to_pendants(g, base, pk.removed_edges)
    problems = verify_proper(g, c)
    if problems:
        raise LemmaViolation(f"route {route} produced an improper coloring: {problems[:3]}")
    if route in CONSTRUCTIVE and c.palette_size != g.max_degree:
        raise LemmaViolation(f"route {route} used {c.palette_size} colors, Delta is {g.max_degree}")
    return ColoringResult(c, cls, route, log)
