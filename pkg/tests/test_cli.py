"""The command-line pipeline: build | transform | check with exit codes."""

import json

import pytest

from corpus import paper_graph
from decompspace import serialize
from decompspace.cli import main


def write_graph(tmp_path):
    G = paper_graph()
    path = tmp_path / "graph.json"
    path.write_text(
        json.dumps(
            {
                "vertices": list(G.vertices),
                "edges": [list(e) for e in G.edges],
            }
        )
    )
    return str(path)


def write_arrow_category(tmp_path):
    path = tmp_path / "cat.json"
    path.write_text(
        json.dumps(
            {
                "objects": ["0", "1"],
                "morphisms": [["i0", "0", "0"], ["i1", "1", "1"], ["f", "0", "1"]],
                "identities": {"0": "i0", "1": "i1"},
                "composition": [
                    ["i0", "i0", "i0"],
                    ["i1", "i1", "i1"],
                    ["i0", "f", "f"],
                    ["f", "i1", "f"],
                ],
            }
        )
    )
    return str(path)


def load_sset(path):
    return serialize.sset_from_obj(serialize.read_file(str(path)))


class TestBuild:
    def test_words_cell_counts(self, tmp_path):
        out = tmp_path / "words.json"
        code = main(
            [
                "build", "words", "--alphabet", "ab", "--max-len", "2",
                "--level", "3", "--output", str(out),
            ]
        )
        assert code == 0
        X = load_sset(out)
        assert len(X.cells[2]) == 17

    def test_terminal_ofc_level_two_is_point(self, tmp_path):
        out = tmp_path / "pt.json"
        assert (
            main(
                ["build", "terminal-ofc", "--bound", "0", "--level", "2",
                 "--output", str(out)]
            )
            == 0
        )
        X = load_sset(out)
        assert [len(c) for c in X.cells] == [1, 1, 1]

    def test_graph_paths_grade_two(self, tmp_path):
        out = tmp_path / "paths.json"
        code = main(
            ["build", "graph-paths", "--input", write_graph(tmp_path),
             "--bound", "2", "--output", str(out)]
        )
        assert code == 0
        A = serialize.ofc_from_obj(serialize.read_file(str(out)))
        assert len(A.grades[2]) == 8

    def test_nerve_and_twisted_arrow(self, tmp_path):
        cat = write_arrow_category(tmp_path)
        out1, out2 = tmp_path / "n.json", tmp_path / "tw.json"
        assert main(["build", "nerve", "--input", cat, "--level", "3",
                     "--output", str(out1)]) == 0
        assert main(["build", "twisted-arrow", "--input", cat, "--level", "1",
                     "--output", str(out2)]) == 0
        assert len(load_sset(out1).cells[1]) == 3
        assert len(load_sset(out2).cells[0]) == 3

    def test_deterministic_bytes(self, tmp_path):
        out1, out2 = tmp_path / "a.json", tmp_path / "b.json"
        for out in (out1, out2):
            main(["build", "words", "--alphabet", "ab", "--max-len", "2",
                  "--level", "2", "--output", str(out)])
        assert out1.read_bytes() == out2.read_bytes()

    def test_schema_violation_exit_2(self, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text('{"vertices": 3}')
        out = tmp_path / "out.json"
        assert main(["build", "graph-paths", "--input", str(bad), "--bound", "1",
                     "--output", str(out)]) == 2

    def test_missing_flag_exit_2(self, tmp_path):
        out = tmp_path / "out.json"
        assert main(["build", "words", "--alphabet", "ab",
                     "--output", str(out)]) == 2


class TestCheck:
    def test_words_fail_segal_pass_decomp(self, tmp_path, capsys):
        obj = tmp_path / "words.json"
        main(["build", "words", "--alphabet", "ab", "--max-len", "2",
              "--level", "3", "--output", str(obj)])
        assert main(["check", "segal", str(obj)]) == 1
        out = capsys.readouterr().out
        assert "verdict: fails" in out and "witness_square" in out
        assert main(["check", "decomp", str(obj)]) == 0
        assert main(["check", "decomp-direct", str(obj)]) == 0
        assert main(["check", "validate", str(obj)]) == 0
        assert main(["check", "twosegal", str(obj)]) == 0
        assert main(["check", "upper2segal", str(obj)]) == 0
        assert main(["check", "lower2segal", str(obj)]) == 0

    def test_culf_on_emitted_length_map(self, tmp_path):
        obj, lmap = tmp_path / "w.json", tmp_path / "len.json"
        main(["build", "words", "--alphabet", "a", "--max-len", "2",
              "--level", "3", "--output", str(obj), "--length-map", str(lmap)])
        assert main(["check", "culf", str(lmap)]) == 0

    def test_machine_format_parses(self, tmp_path, capsys):
        obj = tmp_path / "w.json"
        main(["build", "words", "--alphabet", "ab", "--max-len", "2",
              "--level", "2", "--output", str(obj)])
        main(["check", "segal", str(obj), "--format", "machine"])
        payload = json.loads(capsys.readouterr().out)
        assert payload["criterion"] == "segal"
        assert payload["holds"] is False
        assert payload["witness"]["preimage_count"] == 0

    def test_budget_env(self, tmp_path, capsys, monkeypatch):
        obj = tmp_path / "w.json"
        main(["build", "words", "--alphabet", "ab", "--max-len", "2",
              "--level", "3", "--output", str(obj)])
        monkeypatch.setenv("DECOMP_MAX_SQUARES", "4")
        assert main(["check", "decomp-direct", str(obj)]) == 0
        out = capsys.readouterr().out
        assert "squares_checked: 4" in out and "budget" in out

    def test_unreadable_input_exit_2(self, tmp_path):
        missing = tmp_path / "nope.json"
        assert main(["check", "segal", str(missing)]) == 2


class TestTransform:
    def test_sd_level_drop(self, tmp_path):
        obj, out = tmp_path / "w.json", tmp_path / "sd.json"
        main(["build", "terminal-ofc", "--bound", "2", "--level", "5",
              "--output", str(obj)])
        assert main(["transform", "sd", str(obj), "--output", str(out)]) == 0
        assert load_sset(out).level == 2

    def test_op_twice_is_identity_bytes(self, tmp_path):
        obj = tmp_path / "w.json"
        once = tmp_path / "op.json"
        twice = tmp_path / "opop.json"
        main(["build", "words", "--alphabet", "ab", "--max-len", "2",
              "--level", "3", "--output", str(obj)])
        main(["transform", "op", str(obj), "--output", str(once)])
        main(["transform", "op", str(once), "--output", str(twice)])
        assert obj.read_bytes() == twice.read_bytes()

    def test_dec_top_then_segal(self, tmp_path):
        obj, dec = tmp_path / "w.json", tmp_path / "dec.json"
        main(["build", "words", "--alphabet", "ab", "--max-len", "2",
              "--level", "3", "--output", str(obj)])
        assert main(["transform", "dec-top", str(obj), "--output", str(dec),
                     "--map-output", str(tmp_path / "proj.json")]) == 0
        assert main(["check", "segal", str(dec)]) == 0
        assert main(["check", "culf", str(tmp_path / "proj.json")]) == 0

    def test_default_projection_path(self, tmp_path):
        obj, dec = tmp_path / "w.json", tmp_path / "dec.json"
        main(["build", "terminal-ofc", "--bound", "1", "--level", "2",
              "--output", str(obj)])
        main(["transform", "dec-bot", str(obj), "--output", str(dec)])
        assert (tmp_path / "dec.json.proj.json").exists()

    def test_level_shortfall_exit_3(self, tmp_path):
        obj, out = tmp_path / "w.json", tmp_path / "x.json"
        main(["build", "terminal-ofc", "--bound", "1", "--level", "0",
              "--output", str(obj)])
        assert main(["transform", "sd", str(obj), "--output", str(out)]) == 3
