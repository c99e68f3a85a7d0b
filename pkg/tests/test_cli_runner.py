"""Tests for the command-line runner."""

import io
import json

import pytest

from surreal.cli.runner import main
from surreal.core.constants import EXIT_FAILURE, EXIT_OK, EXIT_USAGE, NODE_BUDGET_ENV
from surreal.laws.registry import registered_laws


@pytest.fixture(autouse=True)
def isolated(tmp_path, monkeypatch):
    """Run every command from an empty directory with no budget override."""
    monkeypatch.chdir(tmp_path)
    monkeypatch.delenv(NODE_BUDGET_ENV, raising=False)
    return tmp_path


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def json_lines(out):
    return [json.loads(line) for line in out.splitlines() if line.strip()]


class TestEval:

    def test_empty_cut_json(self, capsys):
        code, out, _ = run(capsys, "eval", "{|}", "--json")
        assert code == EXIT_OK
        assert json_lines(out) == [
            {"expr": "{|}", "canonical": "{|}", "value": "0", "birthday": 0, "signs": ""}
        ]

    def test_number_text(self, capsys):
        code, out, _ = run(capsys, "eval", "{0|1} + 1/4")
        assert code == EXIT_OK
        assert out.splitlines() == ["canonical: {1/2|1}", "value: 3/4", "birthday: 3", "signs: +-+"]

    @pytest.mark.parametrize("expr,kind,result", [
        ("{0|1} + {0|1} == 1", "boolean", True),
        ("-1 * -1 == 1", "boolean", True),
        ("sign(3/4)", "signs", "+-+"),
        ("value({-1, 0|})", "dyadic", "1"),
        ("birthday({-1, 0|})", "integer", 2),
        ("1 >< {-1, 0|}", "boolean", False),
    ])
    def test_non_number_json(self, capsys, expr, kind, result):
        code, out, _ = run(capsys, "eval", expr, "--json")
        assert code == EXIT_OK
        assert json_lines(out) == [{"expr": expr, "kind": kind, "result": result}]

    def test_canon_reports_canonical_birthday(self, capsys):
        _, out, _ = run(capsys, "eval", "{-1, 0|}", "--json")
        assert json_lines(out)[0]["birthday"] == 1
        assert json_lines(out)[0]["canonical"] == "{0|}"

    def test_syntax_error_exit_code(self, capsys):
        code, _, err = run(capsys, "eval", "1 + * 2")
        assert code == EXIT_USAGE
        assert "position 4" in err

    def test_cut_violation_exit_code(self, capsys):
        code, _, err = run(capsys, "eval", "{1|0}")
        assert code == EXIT_FAILURE
        assert "Cut condition violated" in err

    def test_kind_error_exit_code(self, capsys):
        code, _, err = run(capsys, "eval", "(1 < 2) + 1")
        assert code == EXIT_FAILURE
        assert "Expected a number" in err

    def test_output_is_byte_identical(self, capsys):
        first = run(capsys, "eval", "{0|1} * 3/4", "--json")
        second = run(capsys, "eval", "{0|1} * 3/4", "--json")
        assert first == second


class TestTree:

    def test_json(self, capsys):
        code, out, _ = run(capsys, "tree", "--days", "2", "--format", "json")
        assert code == EXIT_OK
        (doc,) = json_lines(out)
        assert doc["node_count"] == 7
        assert [n["value"] for n in doc["days"][2]] == ["-2", "-1/2", "1/2", "2"]

    def test_check(self, capsys):
        code, out, _ = run(capsys, "tree", "--days", "3", "--check")
        assert code == EXIT_OK
        tree_doc, report = json_lines(out)
        assert tree_doc["node_count"] == 15
        assert report["violations"] == []
        assert report["census"] == [1, 2, 4, 8]

    def test_dot(self, capsys):
        code, out, _ = run(capsys, "tree", "--days", "1", "--format", "dot")
        assert code == EXIT_OK
        assert out.startswith("digraph tree {")

    def test_budget_from_environment(self, capsys, monkeypatch):
        monkeypatch.setenv(NODE_BUDGET_ENV, "10")
        code, _, err = run(capsys, "tree", "--days", "5")
        assert code == EXIT_FAILURE
        assert "Resource limit exceeded" in err

    def test_missing_days_is_usage_error(self, capsys):
        code, _, _ = run(capsys, "tree")
        assert code == EXIT_USAGE


class TestLaws:

    def test_distributivity(self, capsys):
        code, out, _ = run(capsys, "laws", "--law", "DIST_POS", "--max-day", "3", "--positive")
        assert code == EXIT_OK
        (report,) = json_lines(out)
        assert report["law"] == "DIST_POS"
        assert report["failures"] == 0
        assert report["tuples_checked"] == 343

    def test_golden_output_repeats(self, capsys):
        argv = ("laws", "--law", "DIST_POS", "--max-day", "3", "--positive")
        assert run(capsys, *argv) == run(capsys, *argv)

    def test_several_laws(self, capsys):
        code, out, _ = run(capsys, "laws", "--law", "ADD_COMM", "--law", "APART_SYMMETRIC", "--max-day", "2")
        assert code == EXIT_OK
        assert [r["law"] for r in json_lines(out)] == ["ADD_COMM", "APART_SYMMETRIC"]

    def test_limit(self, capsys):
        _, out, _ = run(capsys, "laws", "--law", "ADD_ASSOC", "--max-day", "2", "--limit", "10")
        assert json_lines(out)[0]["tuples_checked"] == 10

    def test_unknown_law(self, capsys):
        code, _, err = run(capsys, "laws", "--law", "NOPE")
        assert code == EXIT_USAGE
        assert "Unknown law: NOPE" in err

    def test_list(self, capsys):
        code, out, _ = run(capsys, "laws", "--list")
        assert code == EXIT_OK
        listed = json_lines(out)
        assert len(listed) == len(registered_laws())
        assert {"name", "arity", "statement"} <= set(listed[0])

    def test_output_and_record(self, capsys, isolated):
        code, _, _ = run(
            capsys, "laws", "--law", "ADD_COMM", "--max-day", "1",
            "--output", "out/run.json", "--record", "out/history.jsonl",
        )
        assert code == EXIT_OK
        with open(isolated / "out" / "run.json") as f:
            assert json.load(f)["reports"][0]["law"] == "ADD_COMM"
        with open(isolated / "out" / "history.jsonl") as f:
            assert len(f.readlines()) == 1


class TestRepl:

    def test_quit(self, capsys, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.StringIO("1 + 1\n:quit\n2\n"))
        code, out, _ = run(capsys, "repl")
        assert code == EXIT_OK
        assert out.splitlines() == ["{1|}"]

    def test_errors_continue(self, capsys, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.StringIO("{1|0}\n\nsign(-1/2)\n1 +\n3/4 < 1\n"))
        code, out, err = run(capsys, "repl")
        assert code == EXIT_OK
        assert out.splitlines() == ["-+", "true"]
        assert err.count("Error:") == 2


class TestConfigOption:

    def test_invalid_yaml(self, capsys, isolated):
        (isolated / "bad.yml").write_text("arena: [unclosed\n")
        code, _, err = run(capsys, "--config", "bad.yml", "eval", "1")
        assert code == EXIT_USAGE
        assert "Invalid YAML" in err

    def test_budget_from_file(self, capsys, isolated):
        (isolated / "small.yml").write_text("arena:\n  node_budget: 10\n")
        code, _, _ = run(capsys, "--config", "small.yml", "tree", "--days", "4")
        assert code == EXIT_FAILURE
