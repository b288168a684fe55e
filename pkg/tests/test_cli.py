"""Command-line interface: outputs, exit codes, file formats."""

from __future__ import annotations

import json
from pathlib import Path

import pytest
from click.testing import CliRunner

from wordbinom.cli import main

DATA = Path(__file__).parent / "data"


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()


def run(runner, *args):
    return runner.invoke(main, list(args))


class TestBinom:
    def test_paper_example(self, runner):
        result = run(runner, "binom", "baba", "ba")
        assert result.exit_code == 0
        assert result.output == "3\n"

    def test_custom_alphabet(self, runner):
        result = run(runner, "--alphabet", "abn", "binom", "banana", "an")
        assert result.exit_code == 0
        assert result.output == "3\n"

    def test_bad_symbol_is_usage_error(self, runner):
        result = run(runner, "binom", "xyz", "a")
        assert result.exit_code == 2


class TestProducts:
    def test_shuffle(self, runner):
        result = run(runner, "shuffle", "aba", "ab")
        assert result.output == "2*aabab + 4*aabba + 2*abaab + 2*ababa\n"

    def test_infiltrate(self, runner):
        result = run(runner, "infiltrate", "a", "b")
        assert result.output == "1*ab + 1*ba\n"


class TestLyndonCommands:
    def test_reduce(self, runner):
        result = run(runner, "lyndon-reduce", "ba")
        assert result.output == "binom(b) * binom(a) - binom(ab)\n"

    def test_reduce_empty_word_is_domain_error(self, runner):
        result = run(runner, "lyndon-reduce", "")
        assert result.exit_code == 1

    def test_list(self, runner):
        result = run(runner, "lyndon-list", "2", "3")
        assert result.output.split() == ["a", "aab", "ab", "abb", "b"]

    def test_list_with_matching_alphabet(self, runner):
        result = run(runner, "--alphabet", "xy", "lyndon-list", "2", "2")
        assert result.output.split() == ["x", "xy", "y"]

    def test_list_alphabet_size_mismatch(self, runner):
        result = run(runner, "--alphabet", "xyz", "lyndon-list", "2", "2")
        assert result.exit_code == 2


class TestReconstructBinary:
    def test_paper_example(self, runner):
        result = run(runner, "reconstruct-binary", "--n", "10", "--pairs", "0:6,1:4,2:2")
        assert result.exit_code == 0
        assert result.output == "bbbbaabbaa\n"

    def test_missing_level_zero(self, runner):
        result = run(runner, "reconstruct-binary", "--n", "10", "--pairs", "1:4")
        assert result.exit_code == 2

    def test_underdetermined_is_domain_error(self, runner):
        result = run(runner, "reconstruct-binary", "--n", "10", "--pairs", "0:6,1:4")
        assert result.exit_code == 1
        assert "not yet unique" in result.output

    def test_impossible_counts_are_domain_errors(self, runner):
        result = run(runner, "reconstruct-binary", "--n", "6", "--pairs", "0:4,1:0,2:4")
        assert result.exit_code == 1

    def test_malformed_pairs(self, runner):
        result = run(runner, "reconstruct-binary", "--n", "6", "--pairs", "0-4")
        assert result.exit_code == 2


class TestQueryGame:
    def test_hidden_word_game(self, runner):
        result = run(runner, "query-game", "--hidden", "bbbbaabbaa")
        assert result.exit_code == 0
        data = json.loads(result.output)
        assert data["outcome"] == "bbbbaabbaa"
        assert data["queries"] == [["b", "6"], ["ab", "4"], ["aab", "2"]]

    def test_transcript_replay(self, runner, tmp_path):
        first = run(runner, "query-game", "--hidden", "aababa")
        transcript_file = tmp_path / "game.json"
        transcript_file.write_text(first.output)
        replayed = run(runner, "query-game", "--transcript", str(transcript_file))
        assert replayed.exit_code == 0
        assert json.loads(replayed.output) == json.loads(first.output)

    def test_requires_exactly_one_source(self, runner):
        assert run(runner, "query-game").exit_code == 2
        result = run(runner, "query-game", "--hidden", "ab", "--transcript", "-")
        assert result.exit_code == 2


class TestProjectionCommands:
    def test_project(self, runner):
        result = run(runner, "--alphabet", "abn", "project", "banana", "ab")
        assert result.output == "baaa\n"

    def test_reconstruct_projections(self, runner):
        result = run(runner, "reconstruct-projections", str(DATA / "banana_projections.json"))
        assert result.exit_code == 0
        assert result.output == "banana\n"

    def test_cyclic_projections_fail(self, runner, tmp_path):
        source = tmp_path / "cyclic.json"
        source.write_text(
            json.dumps(
                {
                    "alphabet": "abn",
                    "projections": {"ab": "ab", "bn": "bn", "an": "na"},
                }
            )
        )
        result = run(runner, "reconstruct-projections", str(source))
        assert result.exit_code == 1

    def test_reconstruct_general_banana(self, runner):
        result = run(runner, "reconstruct-general", str(DATA / "banana.json"))
        assert result.exit_code == 0
        assert result.output == "banana\ncoefficients used: 6\n"

    def test_stdin_input(self, runner):
        payload = (DATA / "banana.json").read_text()
        result = runner.invoke(main, ["reconstruct-general", "-"], input=payload)
        assert result.exit_code == 0
        assert result.output.startswith("banana\n")


class TestCoverageCheck:
    def test_text_sets_reconstructible(self, runner, tmp_path):
        source = tmp_path / "sets.txt"
        source.write_text("ab\nac\nbc\n")
        result = run(runner, "--alphabet", "abc", "coverage-check", str(source))
        assert result.exit_code == 0
        assert result.output == "reconstructible\n"

    def test_json_sets_with_witness(self, runner, tmp_path):
        source = tmp_path / "sets.json"
        source.write_text(json.dumps({"alphabet": "abc", "sets": ["ac", "bc"]}))
        result = run(runner, "coverage-check", str(source))
        assert result.exit_code == 0
        assert result.output == (
            "not reconstructible: pair ab uncovered\nwitness: abc bac\n"
        )


class TestBoundsTable:
    def test_binary_rows(self, runner):
        result = run(runner, "bounds-table", "--from", "7", "--to", "8")
        lines = result.output.splitlines()
        assert lines[0] == "7\t11\t412\t4\t408"
        assert lines[1] == "8\t11\t412\t5\t407"

    def test_general_rows_have_positive_margin(self, runner):
        result = run(runner, "bounds-table", "--from", "5", "--to", "6", "--q", "4")
        for line in result.output.splitlines():
            fields = line.split("\t")
            assert len(fields) == 5
            assert int(fields[4]) > 0

    def test_rejects_bad_range(self, runner):
        assert run(runner, "bounds-table", "--from", "5", "--to", "4").exit_code == 2


class TestBruteUnique:
    def test_not_unique_prints_witness(self, runner):
        result = run(runner, "brute-unique", "abba", "--set", "ab,ba")
        assert result.exit_code == 0
        assert result.output == "false baab\n"

    def test_unique(self, runner):
        result = run(runner, "brute-unique", "abba", "--set", "a,ab,abb")
        assert result.output == "true\n"


class TestDeterminism:
    def test_identical_invocations_are_byte_identical(self, runner):
        for args in (
            ["shuffle", "aba", "ab"],
            ["lyndon-reduce", "bba"],
            ["query-game", "--hidden", "bbbbaabbaa"],
            ["bounds-table", "--from", "7", "--to", "9"],
        ):
            first = run(runner, *args)
            second = run(runner, *args)
            assert first.output == second.output
