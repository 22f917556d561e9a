from __future__ import annotations

import json
import subprocess
import sys

import pytest

from twowalk.cli import main
from twowalk.generators import fixed_graph
from twowalk.graph import Graph, Walk, parse_graph, serialize_graph
from twowalk.verify import verify_two_walk

from conftest import star, two_k2


@pytest.fixture
def write(tmp_path):
    def _write(g: Graph | str, name: str = "g.txt") -> str:
        path = tmp_path / name
        path.write_text(g if isinstance(g, str) else serialize_graph(g))
        return str(path)

    return _write


def run(capsys, *argv) -> tuple[int, dict | str]:
    code = main(list(argv))
    out = capsys.readouterr().out
    try:
        return code, json.loads(out)
    except ValueError:
        return code, out


class TestCheck:
    def test_c5(self, capsys, write):
        code, doc = run(capsys, "check", write(Graph.cycle(5)))
        assert code == 0 and doc["two_k2_free"] and doc["omega"] == 2 and doc["connected"]

    def test_two_k2(self, capsys, write):
        code, doc = run(capsys, "check", write(two_k2()))
        assert code == 3 and doc["witness"] == [0, 1, 2, 3]

    def test_malformed(self, capsys, write):
        assert run(capsys, "check", write("e 0 zero\n"))[0] == 2

    def test_missing_file(self, capsys, tmp_path):
        assert run(capsys, "check", str(tmp_path / "nope.txt"))[0] == 2


class TestWalk:
    def test_g1(self, capsys, write):
        code, doc = run(capsys, "walk", write(fixed_graph("G1")))
        assert code == 0 and max(doc["visits"].values()) == 2
        assert verify_two_walk(fixed_graph("G1"), Walk(doc["walk"]))

    def test_star(self, capsys, write):
        code, doc = run(capsys, "walk", write(star()))
        assert code == 4 and doc == {"cut": [0], "components": 3, "ratio": "1/3"}

    def test_two_k2(self, capsys, write):
        assert run(capsys, "walk", write(two_k2()))[0] == 3

    def test_trace(self, capsys, write):
        code, doc = run(capsys, "walk", "--trace", write(fixed_graph("G2")))
        assert code == 0
        assert set(doc["trace"]) >= {"tower", "first_class", "gamma", "h"}

    def test_walk_then_verify(self, capsys, write, tmp_path):
        graph = write(fixed_graph("G2"))
        _, doc = run(capsys, "walk", graph)
        walk_file = tmp_path / "w.json"
        walk_file.write_text(json.dumps(doc))
        code, report = run(capsys, "verify", graph, str(walk_file))
        assert code == 0 and report == {"ok": True, "violations": []}

    def test_verify_rejects(self, capsys, write, tmp_path):
        walk_file = tmp_path / "w.json"
        walk_file.write_text(json.dumps({"walk": [0, 1, 0]}))
        code, report = run(capsys, "verify", write(Graph.complete(3)), str(walk_file))
        assert code == 1 and not report["ok"]
        walk_file.write_text("not json")
        assert run(capsys, "verify", write(Graph.complete(3)), str(walk_file))[0] == 2


class TestToughness:
    def test_values(self, capsys, write):
        assert run(capsys, "toughness", write(Graph.cycle(4)))[1]["toughness"] == "1/1"
        assert run(capsys, "toughness", write(Graph.complete(4)))[1]["toughness"] == "infinite"

    def test_too_large(self, capsys, write):
        assert run(capsys, "toughness", "--limit", "18", write(Graph.cycle(30)))[0] == 6


class TestDecompose:
    def test_g2(self, capsys, write):
        code, out = run(capsys, "decompose", write(fixed_graph("G2")))
        assert code == 0 and out == "Q1: 0 1 2 3\nD1: 6\nQ2: 4 5\nD2:\n"

    def test_rejects(self, capsys, write):
        assert run(capsys, "decompose", write(two_k2()))[0] == 3
        assert run(capsys, "decompose", write("p 3 0\n"))[0] == 2


class TestGen:
    def test_fixed_round_trip(self, capsys):
        code, out = run(capsys, "gen", "--family", "fixed", "--name", "G2")
        assert code == 0 and out.startswith("# gen family=fixed name=G2\n")
        assert parse_graph(out) == fixed_graph("G2")

    def test_split_matches_library(self, capsys):
        from twowalk.generators import gen_split

        _, out = run(capsys, "gen", "--family", "split", "--clique", "6", "--indep", "3", "--prob", "0.5", "--seed", "11")
        assert parse_graph(out) == gen_split(6, 3, 0.5, 11)

    def test_unknown_fixed(self, capsys):
        assert run(capsys, "gen", "--family", "fixed", "--name", "G9")[0] == 2


class TestFuzz:
    @pytest.mark.parametrize("family", ["split", "co_chordal", "filtered_2tough"])
    def test_all_pass(self, capsys, family):
        code, doc = run(capsys, "fuzz", "--family", family, "--count", "30", "--size-range", "4..10")
        assert code == 0 and doc["passed"] == 30 and doc["failed"] == 0

    def test_invalid_family(self):
        with pytest.raises(SystemExit) as info:
            main(["fuzz", "--family", "petersen"])
        assert info.value.code == 2

    def test_bad_size_range(self):
        with pytest.raises(SystemExit) as info:
            main(["fuzz", "--family", "split", "--size-range", "9..3"])
        assert info.value.code == 2


def test_module_entry_point(tmp_path):
    path = tmp_path / "g.txt"
    path.write_text(serialize_graph(fixed_graph("G1")))
    proc = subprocess.run([sys.executable, "-m", "twowalk", "walk", str(path)], capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["path"] == "constructive"
