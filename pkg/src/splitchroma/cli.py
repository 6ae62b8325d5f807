"""Command line front end: classify | color | verify | gen | oracle.

Exit codes: 0 ok, 1 usage or parse error, 2 verification failure,
3 internal assertion (a lemma of the coloring algorithm failed).
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .coloring import verify_proper
from .errors import LemmaViolation, SplitChromaError
from .graph import Graph
from .io import (
    GraphFormatError,
    coloring_from_dict,
    coloring_to_dict,
    dumps,
    read_graph,
    render_graph,
)
from .oracle import FAMILIES, GenParams, chromatic_index_bruteforce, random_split_graph
from .pipeline import classify, color_graph
from .stretch import stretch_index_oracle

EXIT_OK, EXIT_USAGE, EXIT_VERIFY, EXIT_INTERNAL = 0, 1, 2, 3


def _range(text: str) -> tuple[int, int]:
    lo, _, hi = text.partition(":")
    try:
        a = int(lo)
        b = int(hi) if hi else a
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO:HI, got {text!r}") from None
    if a > b:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return a, b


def _emit(doc: dict, fmt: str, out=None) -> None:
    out = out or sys.stdout
    if fmt == "json":
        out.write(dumps(doc))
    else:
        for key, value in doc.items():
            if isinstance(value, (dict, list)):
                value = json.dumps(value, sort_keys=True)
            out.write(f"{key}: {value}\n")


def _classify_one(path: str) -> dict:
    g, _ = read_graph(path)
    doc = classify(g).as_dict()
    doc["file"] = path
    return doc


def cmd_classify(args) -> int:
    if len(args.paths) == 1:
        docs = [_classify_one(args.paths[0])]
    else:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            docs = list(pool.map(_classify_one, args.paths))
    for doc in docs:
        if len(args.paths) == 1:
            doc.pop("file")
        _emit(doc, args.format)
    return EXIT_OK


def _color_one(path: str, out: str | None, swap_log: str | None, oracle: bool, strict: bool | None) -> dict:
    g, labels = read_graph(path)
    result = color_graph(g, strict=strict)
    cls = result.classification
    extra = {
        "delta": g.max_degree,
        "class": cls.klass,
        "reason": cls.reason if result.route != "fallback" else "fallback",
        "route": result.route,
        "colors_used": len(result.coloring.colors_used()),
    }
    if cls.route == "fallback" and cls.reason == "open-case":
        extra["reason"] = "fallback/open-case"
    if labels:
        extra["labels"] = {str(k): v for k, v in sorted(labels.items())}
    if oracle:
        chi, _ = chromatic_index_bruteforce(g)
        extra["oracle_chromatic_index"] = chi
        if result.palette < chi:
            raise LemmaViolation(f"palette {result.palette} is below the chromatic index {chi}")
    doc = coloring_to_dict(result.coloring, **extra)
    text = dumps(doc)
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")
    if swap_log is not None:
        with open(swap_log, "w", encoding="utf-8") as fh:
            for entry in result.swap_log:
                fh.write(json.dumps(entry.as_dict(), sort_keys=True) + "\n")
    return doc


def cmd_color(args) -> int:
    strict = True if args.strict else None
    if len(args.paths) == 1:
        _color_one(args.paths[0], args.output, args.swap_log, args.oracle, strict)
        return EXIT_OK
    if args.output or args.swap_log:
        raise SplitChromaError("--output/--swap-log take a single input; batch mode writes PATH.coloring.json")
    jobs = [(p, p + ".coloring.json", None, args.oracle, strict) for p in args.paths]
    with ProcessPoolExecutor(max_workers=args.jobs) as pool:
        list(pool.map(_color_one, *zip(*jobs)))
    return EXIT_OK


def cmd_verify(args) -> int:
    g, _ = read_graph(args.graph)
    try:
        doc = json.loads(Path(args.coloring).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"{args.coloring}: invalid JSON: {exc}") from None
    c = coloring_from_dict(doc)
    problems = verify_proper(g, c)
    for v in problems:
        print(v)
    if problems:
        return EXIT_VERIFY
    print(f"ok: proper {c.palette_size}-edge-coloring of {g.m} edges")
    return EXIT_OK


def cmd_gen(args) -> int:
    params = GenParams(
        clique_size=args.clique,
        independent_size=args.independent,
        s_degree=(args.s_degree[0], args.s_degree[1]) if args.s_degree else (1, None),
        seed=args.seed,
        family=args.filter,
        max_tries=args.max_tries,
    )
    g, _ = random_split_graph(params)
    text = render_graph(g, comment=f"split graph seed={args.seed} filter={args.filter}")
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_oracle(args) -> int:
    g, _ = read_graph(args.path)
    chi, witness = chromatic_index_bruteforce(g, limit=args.limit)
    doc = {"delta": g.max_degree, "chromatic_index": chi, "class": "1" if chi == g.max_degree else "2"}
    if g.n <= 10 and g.n >= 1 and g.is_connected():
        doc["stretch_index"] = stretch_index_oracle(g)
    doc["witness"] = coloring_to_dict(witness)
    _emit(doc, args.format)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="splitchroma", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify split graphs by stretch index and class")
    p.add_argument("paths", nargs="+")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--jobs", type=int, default=None)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("color", help="edge-color a split graph")
    p.add_argument("paths", nargs="+")
    p.add_argument("-o", "--output")
    p.add_argument("--swap-log", help="write the color-swap log as JSON lines")
    p.add_argument("--oracle", action="store_true", help="cross-check against the brute-force chromatic index")
    p.add_argument("--strict", action="store_true", help="enable all lemma assertions")
    p.add_argument("--jobs", type=int, default=None)
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("verify", help="check a coloring document against a graph")
    p.add_argument("graph")
    p.add_argument("coloring")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="generate a random split graph")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--filter", choices=FAMILIES, default="any")
    p.add_argument("--clique", type=_range, default=(3, 10), metavar="LO:HI")
    p.add_argument("--independent", type=_range, default=(1, 10), metavar="LO:HI")
    p.add_argument("--s-degree", type=_range, default=None, metavar="LO:HI")
    p.add_argument("--max-tries", type=int, default=10_000)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("oracle", help="exact chromatic index (and stretch index) of a small graph")
    p.add_argument("path")
    p.add_argument("--limit", type=int, default=24)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except LemmaViolation as exc:
        print(f"internal assertion: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (SplitChromaError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
