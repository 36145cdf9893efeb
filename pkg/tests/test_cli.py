"""Command-line interface: subcommands, formats, exit codes."""

from __future__ import annotations

import json

import pytest

from lightsout.cli import main

C5_DOC = '{"n": 5, "edges": [[0,1],[1,2],[2,3],[3,4],[0,4]]}'
P3_DOC = '{"n": 3, "edges": [[0,1],[1,2]]}'
K2_DOC = '{"n": 2, "edges": [[0,1]]}'


@pytest.fixture
def c5_path(tmp_path):
    path = tmp_path / "c5.json"
    path.write_text(C5_DOC)
    return str(path)


@pytest.fixture
def p3_path(tmp_path):
    path = tmp_path / "p3.json"
    path.write_text(P3_DOC)
    return str(path)


def run_json(capsys, argv):
    code = main(argv)
    assert code == 0, capsys.readouterr().err
    return json.loads(capsys.readouterr().out)


class TestAnalyze:
    def test_five_cycle_text(self, capsys, c5_path):
        assert main(["analyze", "--graph", c5_path]) == 0
        out = capsys.readouterr().out
        assert "nullity: 0" in out
        assert "always solvable: yes" in out
        assert "AO AO AO AO AO" in out

    def test_five_cycle_json(self, capsys, c5_path):
        doc = run_json(capsys, ["analyze", "--graph", c5_path, "--json"])
        assert doc == {
            "nullity": 0,
            "alwaysSolvable": True,
            "vertexClasses": ["AO"] * 5,
            "oddDominatingCount": 1,
        }

    def test_generated_graph(self, capsys):
        doc = run_json(capsys, ["analyze", "--gen", "complete:2+complete:2", "--json"])
        assert doc["nullity"] == 2

    def test_graph6_input(self, capsys, tmp_path):
        path = tmp_path / "k3.g6"
        path.write_text("Bw\n")
        doc = run_json(capsys, ["analyze", "--graph", str(path), "--json"])
        assert doc["nullity"] == 2


class TestSolve:
    def test_solvable(self, capsys, p3_path):
        doc = run_json(capsys, ["solve", "--graph", p3_path, "--config", "111", "--json"])
        assert doc == {"solvable": True, "pattern": "010", "solutionCount": 1}

    def test_unsolvable_certificate(self, capsys, tmp_path):
        path = tmp_path / "k2.json"
        path.write_text(K2_DOC)
        doc = run_json(capsys, ["solve", "--graph", str(path), "--config", "10", "--json"])
        assert doc == {"solvable": False, "certificate": "11"}

    def test_length_mismatch_is_domain_error(self, capsys, p3_path):
        assert main(["solve", "--graph", p3_path, "--config", "11"]) == 1
        assert "error" in capsys.readouterr().err


class TestClassify:
    def test_default_configuration(self, capsys, p3_path):
        doc = run_json(capsys, ["classify", "--graph", p3_path, "--set", "1", "--json"])
        assert doc == {"set": [1], "config": "111", "tag": "AO"}

    def test_explicit_configuration(self, capsys, p3_path):
        doc = run_json(
            capsys,
            ["classify", "--graph", p3_path, "--set", "0,2", "--config", "111", "--json"],
        )
        assert doc["tag"] == "NO"


class TestStar:
    def test_merge_report(self, capsys):
        doc = run_json(
            capsys,
            ["star", "--gen", "complete:2+complete:2", "--a1", "0", "--a2", "2", "--json"],
        )
        assert doc["predicted"]["delta_nu"] == -2
        assert doc["actual_delta_nu"] == -2
        assert doc["agrees"] is True


class TestWhatif:
    def test_chord_addition(self, capsys, c5_path):
        doc = run_json(capsys, ["whatif", "--graph", c5_path, "--u", "0", "--v", "2", "--json"])
        assert doc["action"] == "add"
        assert doc["delta_nu"] == 0
        assert doc["type_tag"] == "Type2"

    def test_removal_has_no_type(self, capsys, c5_path):
        doc = run_json(capsys, ["whatif", "--graph", c5_path, "--u", "0", "--v", "1", "--json"])
        assert doc["action"] == "remove"
        assert "type_tag" not in doc

    def test_strict_type6_flag(self, capsys):
        doc = run_json(
            capsys,
            ["whatif", "--gen", "path:5", "--u", "0", "--v", "4", "--json"],
        )
        assert doc["type_tag"] == "Type6"
        doc = run_json(
            capsys,
            ["whatif", "--gen", "path:5", "--u", "0", "--v", "4", "--strict-type6", "--json"],
        )
        assert doc["type_tag"] == "Other"


class TestSearch:
    def test_removal(self, capsys):
        doc = run_json(
            capsys, ["search", "--gen", "complete:2+complete:2", "--find", "removal", "--json"]
        )
        assert doc == {"kind": "removal", "edge": [0, 1], "nullity_before": 2, "nullity_after": 1}

    def test_addition_none_case(self, capsys, c5_path):
        doc = run_json(capsys, ["search", "--graph", c5_path, "--find", "addition", "--json"])
        assert doc["edge"] is None

    def test_drop2(self, capsys):
        doc = run_json(capsys, ["search", "--gen", "complete:3", "--find", "drop2", "--json"])
        assert doc["action"] == "remove" and doc["edge"] == [0, 1]

    def test_witness(self, capsys, c5_path):
        doc = run_json(capsys, ["search", "--graph", c5_path, "--find", "witness", "--json"])
        assert doc["kind"] == "B"
        assert doc["replay_valid"] is True

    def test_precondition_error_exit_code(self, capsys, c5_path):
        assert main(["search", "--graph", c5_path, "--find", "removal"]) == 1


class TestVerify:
    def test_small_sweep(self, capsys):
        doc = run_json(capsys, ["verify", "--max-n", "2", "--json"])
        assert doc["all_passed"] is True
        assert doc["lemmas"]["all_passed"] is True
        assert doc["star_table"]["all_passed"] is True
        assert doc["theorems"]["all_passed"] is True

    def test_guard_exceeded_is_domain_error(self, capsys):
        assert main(["verify", "--max-n", "7"]) == 1


class TestEnumerate:
    def test_counts_and_format(self, capsys):
        assert main(["enumerate", "--n", "3"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert len(lines) == 8
        assert lines[0] == "B?"

    def test_json_lines(self, capsys):
        assert main(["enumerate", "--n", "3", "--format", "json"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        docs = [json.loads(line) for line in lines]
        assert docs[1] == {"n": 3, "edges": [[0, 1]]}

    def test_range_restriction(self, capsys):
        assert main(["enumerate", "--n", "4", "--start", "10", "--stop", "12"]) == 0
        assert len(capsys.readouterr().out.strip().splitlines()) == 2

    def test_zero_vertices_is_domain_error(self, capsys):
        assert main(["enumerate", "--n", "0"]) == 1


class TestUsageErrors:
    def test_unknown_subcommand(self):
        with pytest.raises(SystemExit) as err:
            main(["frobnicate"])
        assert err.value.code == 2

    def test_missing_graph_source(self):
        with pytest.raises(SystemExit) as err:
            main(["analyze"])
        assert err.value.code == 2

    def test_conflicting_graph_sources(self, c5_path):
        with pytest.raises(SystemExit) as err:
            main(["analyze", "--graph", c5_path, "--gen", "cycle:5"])
        assert err.value.code == 2

    def test_bad_graph_file_is_domain_error(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text('{"n": 2, "edges": [[0, 0]]}')
        assert main(["analyze", "--graph", str(path)]) == 1
        assert "loop" in capsys.readouterr().err

    def test_json_error_document(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text('{"n": 2, "edges": [[0, 0]]}')
        assert main(["analyze", "--graph", str(path), "--json"]) == 1
        doc = json.loads(capsys.readouterr().err)
        assert doc["error"]["code"] == "InputError"
