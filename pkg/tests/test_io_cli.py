import json
import subprocess
import sys

import pytest
from hypothesis import given, settings

from conftest import G6, G8, MISSING_DONOR, graphs
from splitchroma import EdgeColoring, Graph
from splitchroma.cli import main
from splitchroma.io import GraphFormatError, coloring_from_dict, coloring_to_dict, parse_graph, render_graph


@given(graphs(max_n=8))
@settings(max_examples=100, deadline=None)
def test_round_trip(g):
    labels = {v: f"v{v}" for v in g.vertices[:2]}
    g2, labels2 = parse_graph(render_graph(g, labels, comment="x"))
    assert g2 == g and labels2 == labels


@pytest.mark.parametrize(
    "text, line",
    [
        ("3 1\n0 3\n", 2),
        ("3 1\n1 1\n", 2),
        ("3 2\n0 1\n1 0\n", 3),
        ("3 1\n0 x\n", 2),
        ("3 2\n0 1\n", None),
        ("# only a comment\n", None),
    ],
)
def test_parse_errors(text, line):
    with pytest.raises(GraphFormatError) as err:
        parse_graph(text)
    assert err.value.line == line


def test_coloring_document_round_trip():
    c = EdgeColoring({(0, 1): 1, (1, 2): 2}, palette_size=2)
    doc = json.loads(json.dumps(coloring_to_dict(c, note="x")))
    assert coloring_from_dict(doc) == c
    with pytest.raises(GraphFormatError):
        coloring_from_dict({"edges": []})


@pytest.fixture
def write(tmp_path):
    def _write(name, g):
        path = tmp_path / name
        path.write_text(render_graph(g))
        return str(path)

    return _write


def test_classify(write, capsys):
    assert main(["classify", write("g8.txt", G8)]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["sigma"] == 3 and doc["class"] == "1" and doc["reason"] == "theorem9"
    assert doc["anchor"] == {"delta_vertex": 1, "s1": 5, "strict": True}


def test_classify_text_and_batch(write, capsys):
    a, b = write("a.txt", G6), write("b.txt", Graph.complete(5))
    assert main(["classify", a, b, "--format", "text", "--jobs", "2"]) == 0
    out = capsys.readouterr().out
    assert "reason: theorem9" in out and "reason: overfull" in out


def test_color_and_verify(write, tmp_path, capsys):
    g = write("g8.txt", G8)
    out, log = str(tmp_path / "c.json"), str(tmp_path / "swaps.jsonl")
    assert main(["color", g, "-o", out, "--swap-log", log, "--oracle", "--strict"]) == 0
    doc = json.loads(open(out).read())
    assert doc["palette"] == 6 and doc["oracle_chromatic_index"] == 6 and doc["route"] == "theorem9"
    assert main(["verify", g, out]) == 0
    # edges 0-1 and 0-2 come first; give them the same color
    doc["edges"][1]["color"] = doc["edges"][0]["color"]
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(doc))
    assert main(["verify", g, str(bad)]) == 2


def test_color_batch_writes_sidecars(write, tmp_path):
    paths = [write("a.txt", G6), write("b.txt", Graph.complete(5))]
    assert main(["color", *paths, "--jobs", "2"]) == 0
    doc = json.loads(open(paths[1] + ".coloring.json").read())
    assert doc["reason"] == "fallback" and doc["palette"] == 5


def test_exit_codes(write, tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("2 1\n0 5\n")
    assert main(["classify", str(bad)]) == 1
    assert main(["classify", str(tmp_path / "missing.txt")]) == 1
    c5 = Graph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)])
    assert main(["classify", write("c5.txt", c5)]) == 1
    assert main(["color", write("stall.txt", MISSING_DONOR)]) == 3
    assert "internal assertion" in capsys.readouterr().err
    with pytest.raises(SystemExit):
        main(["bogus"])


def test_gen_is_deterministic(tmp_path, capsys):
    assert main(["gen", "--seed", "5", "--filter", "theorem9"]) == 0
    first = capsys.readouterr().out
    assert main(["gen", "--seed", "5", "--filter", "theorem9"]) == 0
    assert capsys.readouterr().out == first
    g, _ = parse_graph(first)
    assert g.max_degree % 2 == 0


def test_oracle_command(write, capsys):
    assert main(["oracle", write("g6.txt", G6)]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["chromatic_index"] == 4 and doc["class"] == "1" and doc["stretch_index"] == 3


def test_module_entry_point(write):
    proc = subprocess.run([sys.executable, "-m", "splitchroma", "classify", write("g6.txt", G6)],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["sigma"] == 3
