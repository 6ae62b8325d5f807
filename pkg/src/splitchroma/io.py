"""Plain-text edge lists and JSON coloring documents.

Graph grammar::

    file    := (comment | blank)* header (edge | comment | blank)*
    header  := INT INT            # n m
    edge    := INT INT            # 0-based endpoints
    comment := "#" TEXT           # "# label <id> <name>" attaches a label

Coloring documents are JSON objects ``{"palette": k, "edges": [{"u", "v",
"color"}, ...]}``; extra keys are ignored on input.
"""

from __future__ import annotations

import json
from pathlib import Path

from .coloring import EdgeColoring
from .errors import SplitChromaError
from .graph import Graph


class GraphFormatError(SplitChromaError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def parse_graph(text: str) -> tuple[Graph, dict[int, str]]:
    labels: dict[int, str] = {}
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            parts = line[1:].split(maxsplit=2)
            if len(parts) == 3 and parts[0] == "label":
                try:
                    labels[int(parts[1])] = parts[2]
                except ValueError:
                    raise GraphFormatError(f"bad label line {raw!r}", lineno) from None
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"expected two integers, got {raw!r}", lineno)
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"expected two integers, got {raw!r}", lineno) from None
        if header is None:
            if a < 0 or b < 0:
                raise GraphFormatError("negative header value", lineno)
            header = (a, b)
            continue
        n = header[0]
        if not (0 <= a < n and 0 <= b < n):
            raise GraphFormatError(f"vertex out of range 0..{n - 1}", lineno)
        if a == b:
            raise GraphFormatError(f"self-loop at {a}", lineno)
        key = (min(a, b), max(a, b))
        if key in seen:
            raise GraphFormatError(f"duplicate edge {a} {b}", lineno)
        seen.add(key)
        edges.append((a, b))
    if header is None:
        raise GraphFormatError("missing 'n m' header")
    if len(edges) != header[1]:
        raise GraphFormatError(f"header announces {header[1]} edges, found {len(edges)}")
    for v in labels:
        if not 0 <= v < header[0]:
            raise GraphFormatError(f"label for unknown vertex {v}")
    return Graph.from_edges(header[0], edges), labels


def render_graph(g: Graph, labels: dict[int, str] | None = None, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    for v, name in sorted((labels or {}).items()):
        lines.append(f"# label {v} {name}")
    lines.append(f"{g.n} {g.m}")
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def read_graph(path: str | Path) -> tuple[Graph, dict[int, str]]:
    return parse_graph(Path(path).read_text(encoding="utf-8"))


def coloring_to_dict(c: EdgeColoring, **extra) -> dict:
    doc = dict(extra)
    doc["palette"] = c.palette_size
    doc["edges"] = [{"u": u, "v": v, "color": col} for (u, v), col in sorted(c.items())]
    return doc


def coloring_from_dict(doc: dict) -> EdgeColoring:
    try:
        c = EdgeColoring(palette_size=int(doc["palette"]))
        for item in doc["edges"]:
            u, v, col = int(item["u"]), int(item["v"]), int(item["color"])
            if (u, v) in c:
                raise GraphFormatError(f"edge {u}-{v} listed twice")
            c[u, v] = col
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, GraphFormatError):
            raise
        raise GraphFormatError(f"malformed coloring document: {exc}") from None
    return c


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"
