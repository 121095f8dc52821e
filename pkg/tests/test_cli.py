"""Tests for the command line: output formats and exit codes."""

import json
import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parents[1]
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from modalchar.cli import CONSTRUCTS, EXIT_BOUND, EXIT_FAIL, EXIT_OK, EXIT_PARSE, EXIT_USAGE, main
from modalchar.services.export import write_model
from modalchar.services.kripke import deadlock, empty_loop, full_loop


def test_parse_prints_measures(capsys):
    assert main(["parse", "~(<>p)"]) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload["formula"] == "[]~p"
    assert payload["modal_depth"] == 1
    assert payload["size"] == 2


def test_exit_codes(capsys):
    assert main(["parse", "p &"]) == EXIT_PARSE
    assert main(["no-such-command"]) == EXIT_USAGE
    assert main([]) == EXIT_USAGE
    assert main(["tower", "--max-n", "5"]) == EXIT_BOUND
    assert main(["characterize", "p", "--props", "q", "--out", "unused"]) == EXIT_PARSE


def test_nf_lists_disjuncts(capsys):
    assert main(["nf", "p & (q | r)", "--cases"]) == EXIT_OK
    assert capsys.readouterr().out.splitlines() == ["i\tp & q", "i\tp & r"]


def test_characterize_writes_examples(tmp_path, capsys):
    out = tmp_path / "dia_p"
    assert main(["characterize", "<>p", "--props", "p", "--out", str(out), "--format", "json,dot"]) == EXIT_OK
    summary = json.loads(capsys.readouterr().out)
    assert (summary["positives"], summary["negatives"]) == (1, 2)
    assert (out / "formula.txt").read_text(encoding="utf-8") == "<>p\n"
    assert (out / "pos" / "000.json").exists()
    assert (out / "pos" / "000.dot").exists()
    assert (out / "neg" / "001.json").exists()
    assert "positives: 1" in (out / "summary.txt").read_text(encoding="utf-8")

    positives = [str(path) for path in sorted((out / "pos").glob("*.json"))]
    negatives = [str(path) for path in sorted((out / "neg").glob("*.json"))]
    assert main(["fits", "<>p", "--pos", *positives, "--neg", *negatives]) == EXIT_OK
    assert main(["fits", "[]p", "--pos", *positives, "--neg", *negatives]) == EXIT_FAIL


def test_unknown_output_format(tmp_path):
    assert main(["characterize", "p", "--out", str(tmp_path), "--format", "png"]) == EXIT_USAGE


def test_model_commands(tmp_path, capsys):
    sig = ("p",)
    stuck = write_model(deadlock(sig), tmp_path / "deadlock.json")
    full = write_model(full_loop(sig), tmp_path / "full.json")
    empty = write_model(empty_loop(sig), tmp_path / "empty.json")

    assert main(["modelcheck", "[]p", str(stuck)]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "true"
    assert main(["height", str(empty)]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "inf"

    assert main(["wsim", str(stuck), str(full)]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "true"
    assert json.loads("\n".join(lines[1:])) == {"pairs": [["d", "o"]]}

    assert main(["wsim", str(stuck), str(empty)]) == EXIT_OK
    assert capsys.readouterr().out.splitlines() == ["false", "none"]

    assert main(["bisim", str(empty), str(stuck), "--depth", "0"]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "true"


def test_unravel_to_stdout(tmp_path, capsys):
    empty = write_model(empty_loop(("p",)), tmp_path / "empty.json")
    assert main(["unravel", str(empty), "--depth", "2"]) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert len(payload["states"]) == 3


def test_tower_rows(capsys):
    assert main(["tower", "--max-n", "2"]) == EXIT_OK
    assert capsys.readouterr().out.splitlines() == ["(1, 2, 2)", "(2, 4, 4)"]


def test_verify_minimality(capsys):
    assert main(["verify", "minimality", "--n", "1"]) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload["verdict"] == "pass"
    assert "seconds" not in payload["stats"]


def test_fixtures(capsys):
    assert main(["fixtures", "coproduct"]) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["verdict"] == "pass"


def _squashed(text):
    return "".join(text.split())


@pytest.mark.parametrize("path", sorted(CONSTRUCTS))
def test_help_names_the_construct(path, capsys):
    with pytest.raises(SystemExit) as stop:
        main([*path, "--help"])
    assert stop.value.code == 0
    assert _squashed(CONSTRUCTS[path]) in _squashed(capsys.readouterr().out)


def test_bisim_help_explains_its_arguments(capsys):
    with pytest.raises(SystemExit):
        main(["bisim", "--help"])
    out = _squashed(capsys.readouterr().out)
    assert _squashed("Left model JSON file.") in out
    assert _squashed("Right model JSON file.") in out
    assert _squashed("agreement on every formula of modal depth at most n") in out


def test_recorded_runs_go_to_the_ledger(ledger_dir, capsys):
    assert main(["verify", "minimality", "--n", "1", "--record"]) == EXIT_OK
    capsys.readouterr()
    assert main(["runs", "--filter", "verify minimality"]) == EXIT_OK
    rows = json.loads(capsys.readouterr().out)
    assert rows
    assert all(row["command"] == "verify minimality" and row["verdict"] == "pass" for row in rows)
    assert (ledger_dir / "runs.db").exists()
