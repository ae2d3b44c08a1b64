from __future__ import annotations

import json
import random
import subprocess
import sys

import pytest

from oddcolour import SimpleGraph, WeightedGraph
from oddcolour.cli import main
from oddcolour.colouring import colour_graph
from oddcolour.errors import BadWeight, DuplicateEdge, ParseError, SelfLoop
from oddcolour.formats import parse_graph, serialize, to_jsonable

from conftest import cycle, random_weighted


def random_simple(n, p, rng):
    return SimpleGraph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def test_parse_examples():
    G = parse_graph("3 2\n0 1\n1 2\n")
    assert isinstance(G, SimpleGraph) and G.edges() == [(0, 1), (1, 2)]
    H = parse_graph("# weighted\n3 2\n0 1 3\n1 2 5  # heavy\n")
    assert isinstance(H, WeightedGraph) and H.edges() == [(0, 1, 3), (1, 2, 5)]
    # labels outside 0..n-1 are renumbered densely
    G = parse_graph("3 2\n10 20\n20 30\n")
    assert G.edges() == [(0, 1), (1, 2)]
    assert parse_graph("4 0\n").n == 4


@pytest.mark.parametrize(
    "text, exc, line",
    [
        ("", ParseError, 1),
        ("3\n", ParseError, 1),
        ("3 2\n0 1\n", ParseError, 3),
        ("3 1\n0 1\n1 2\n", ParseError, 3),
        ("3 1\n0 x\n", ParseError, 2),
        ("3 2\n0 1 3\n1 2\n", ParseError, 3),
        ("3 1\n0 1 6\n", BadWeight, 2),
        ("3 1\n1 1\n", SelfLoop, 2),
        ("3 2\n0 1\n1 0\n", DuplicateEdge, 3),
    ],
)
def test_parse_errors(text, exc, line):
    with pytest.raises(exc) as info:
        parse_graph(text)
    assert info.value.line == line


def test_canonical_output():
    tri = SimpleGraph.from_edges(3, [(1, 2), (0, 2), (1, 0)])
    assert serialize(tri) == b"3 3\n0 1\n0 2\n1 2\n"
    H = WeightedGraph.from_edges(2, [(1, 0, 4)])
    assert serialize(H) == b"2 1\n0 1 4\n"
    assert json.loads(serialize(H, "json")) == {"type": "weighted_graph", "n": 2, "edges": [[0, 1, 4]], "tree": None}


def test_round_trip_100_graphs():
    rng = random.Random(2024)
    for i in range(100):
        n = rng.randrange(1, 30)
        G = random_weighted(n, rng.random(), rng) if i % 2 else random_simple(n, rng.random(), rng)
        # an edge list without edges carries no weights, so the kind is passed on
        kind = isinstance(G, WeightedGraph)
        for fmt in ("edgelist", "json"):
            text = serialize(G, fmt)
            back = parse_graph(text, fmt, weighted=kind)
            assert back == G
            assert serialize(back, fmt) == text


def test_to_jsonable_infinity_and_sets():
    assert to_jsonable({"x": float("inf"), "s": frozenset({3, 1})}) == {"x": None, "s": [1, 3]}


def test_colouring_json():
    col = colour_graph(cycle(7), 3, 0)
    data = json.loads(serialize(col))
    assert data["valid"] is True and data["violating_edge"] is None
    assert data["colours"] == list(col.colour)


def run(args, capsys, stdin=None, monkeypatch=None):
    code = main(args)
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def files(tmp_path):
    paths = {}
    paths["c7"] = tmp_path / "c7.txt"
    paths["c7"].write_bytes(serialize(cycle(7)))
    paths["c5"] = tmp_path / "c5.txt"
    paths["c5"].write_bytes(serialize(cycle(5)))
    paths["bad"] = tmp_path / "bad.txt"
    paths["bad"].write_text("3 1\n0 0\n")
    paths["c15w"] = tmp_path / "c15w.txt"
    paths["c15w"].write_bytes(serialize(WeightedGraph.from_edges(15, [(i, (i + 1) % 15, 3) for i in range(15)])))
    return paths


def test_cli_colour_and_verify(files, capsys, tmp_path):
    code, out, _ = run(["colour", "--k", "3", str(files["c7"])], capsys)
    assert code == 0
    data = json.loads(out)
    assert data["valid"] and len(set(data["colours"])) <= 3
    col = tmp_path / "col.json"
    col.write_text(out)
    assert run(["verify-colouring", str(files["c7"]), str(col)], capsys)[0] == 0
    col.write_text(json.dumps({"colours": [1] * 7}))
    code, out, _ = run(["verify-colouring", str(files["c7"]), str(col)], capsys)
    assert code == 1 and json.loads(out)["violating_edge"] == [0, 1]


def test_cli_exit_codes(files, capsys):
    code, out, err = run(["colour", "--k", "3", "--json", str(files["c5"])], capsys)
    assert code == 1 and out == ""
    payload = json.loads(err)
    assert payload["error"] == "OddGirthTooSmall" and payload["exit_code"] == 1
    code, _, err = run(["odd-girth", "--json", str(files["bad"])], capsys)
    assert code == 2 and json.loads(err)["line"] == 2
    assert run(["odd-girth", "/nonexistent/graph"], capsys)[0] == 2
    assert run(["decompose", "--k", "3", str(files["c7"])], capsys)[0] == 2  # unweighted input
    assert run(["generate", "cycle"], capsys)[0] == 2
    assert run(["check-membership", "--k", "8", str(files["c15w"])], capsys)[0] == 0
    assert run(["check-membership", "--k", "7", "--s", "14", str(files["c15w"])], capsys)[0] == 1
    assert run(["decompose", "--k", "7", str(files["c15w"])], capsys)[0] == 1


def test_cli_graph_commands(files, capsys):
    code, out, _ = run(["odd-girth", str(files["c7"])], capsys)
    assert code == 0 and json.loads(out)["odd_girth"] == 7
    code, out, _ = run(["build-aux", str(files["c7"])], capsys)
    assert code == 0 and out == "2 1\n0 1 3\n"
    code, out, _ = run(["decompose", "--k", "22", str(files["c15w"])], capsys)
    dec = json.loads(out)
    assert code == 0 and dec["valid"] and dec["provenance"] == "ball"
    code, out, _ = run(["validate-B", str(files["c15w"]), ",".join(map(str, dec["B"]))], capsys)
    assert code == 0 and json.loads(out)["valid"]
    assert run(["validate-B", str(files["c15w"]), "0,1,2,3,4,5,6,7,8,9,10,11,12,13"], capsys)[0] == 1
    code, out, _ = run(["generate", "blow-up", "--cycle", "5", "--size", "2"], capsys)
    assert code == 0 and out.startswith("10 20\n")
    code, out, _ = run(["generate", "mycielski", "--base", "5", "--levels", "1", "--out-format", "json"], capsys)
    assert json.loads(out)["n"] == 11


def test_cli_output_file(files, capsys, tmp_path):
    target = tmp_path / "out.txt"
    assert run(["generate", "cycle", "--n", "9", "-o", str(target)], capsys)[0] == 0
    assert target.read_text().startswith("9 9\n")


@pytest.mark.parametrize(
    "args",
    [
        ["generate", "random-hk", "--k", "8", "--n", "30", "--bias", "0.3", "--seed", "4"],
        ["generate", "random-hk", "--k", "8", "--n", "30", "--locality", "2", "--seed", "4"],
        ["colour", "--k", "3", "C7"],
        ["build-aux", "C7"],
    ],
)
def test_cli_is_deterministic(args, files, tmp_path):
    args = [str(files["c7"]) if a == "C7" else a for a in args]
    outs = [
        subprocess.run([sys.executable, "-m", "oddcolour.cli", *args], capture_output=True, check=True).stdout
        for _ in range(2)
    ]
    assert outs[0] == outs[1] and outs[0]
