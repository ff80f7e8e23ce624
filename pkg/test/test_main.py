from dataclasses import replace

import orjson
import pytest
from click.testing import CliRunner

import src.main as main
from src.character.canonical import EpsCharacter, make_character
from src.main import cli
from src.selftest import run_selftest
from src.utilities.helpers import load_defaults


@pytest.fixture
def runner(tmp_path, monkeypatch):
    monkeypatch.setattr(main, "ensure_cache_dir", lambda: tmp_path / "cache")
    (tmp_path / "cache").mkdir()
    return CliRunner()


def test_value_command(runner, tmp_path):
    out = tmp_path / "report.json"
    result = runner.invoke(cli, ["value", "--disc", "7", "--tol", "1e-8", "--out", str(out)])
    assert result.exit_code == 0, result.output
    assert "root number W = +1" in result.output
    report = orjson.loads(out.read_bytes())
    assert report["W"] == 1
    assert report["L_central"] > 0


def test_invalid_discriminant_exit_code(runner):
    result = runner.invoke(cli, ["value", "--disc", "12"])
    assert result.exit_code == 2
    assert "not a valid discriminant" in result.output


def test_invalid_twist_exit_code(runner):
    result = runner.invoke(cli, ["value", "--disc", "7", "--twist", "7"])
    assert result.exit_code == 2
    assert "not a valid twist" in result.output


def test_derivative_on_plus_one_case(runner):
    result = runner.invoke(cli, ["derivative", "--disc", "7", "--tol", "1e-8"])
    assert result.exit_code == 0, result.output
    assert "derivative route not meaningful" in result.output


def test_rootnumber_command(runner):
    result = runner.invoke(cli, ["rootnumber", "--disc", "7", "--tol", "1e-8"])
    assert result.exit_code == 0, result.output
    assert "W_solved" in result.output


def test_charsum_command(runner, tmp_path):
    out = tmp_path / "charsum.json"
    result = runner.invoke(cli, ["charsum", "--disc", "23", "--twist", "5", "--v", "3", "--M", "10", "--w", "200", "--out", str(out)])
    assert result.exit_code == 0, result.output
    payload = orjson.loads(out.read_bytes())
    assert payload["reduction"]["passed"] is True
    assert payload["sum_value"] == payload["reduction"]["direct"]


def test_sweep_resume_is_idempotent(runner, tmp_path):
    out = tmp_path / "sweep.jsonl"
    args = ["sweep", "--dmax", "8", "--twist", "1", "--weight", "1", "--tol", "1e-8", "--out", str(out)]
    first = runner.invoke(cli, args)
    assert first.exit_code == 0, first.output
    content = out.read_bytes()
    lines = content.splitlines()
    assert {orjson.loads(l)["D"] for l in lines} == {7, 8}
    again = runner.invoke(cli, args + ["--resume"])
    assert again.exit_code == 0, again.output
    assert out.read_bytes() == content
    assert f"{len(lines)} already present" in again.output


def _flipped(*args, **kwargs):
    char = make_character(*args, **kwargs)
    return EpsCharacter(replace(char.canonical, table=-char.canonical.table), d=char.d, k=char.k)


def test_selftest_detects_corrupted_character(monkeypatch):
    monkeypatch.setattr("src.selftest.make_character", _flipped)
    [outcome] = run_selftest(only=["characters"])
    assert outcome.name == "characters"
    assert not outcome.passed
    assert outcome.witness["D"] == 7


def test_selftest_command_single_suite(runner):
    result = runner.invoke(cli, ["selftest", "--suite", "class_number"])
    assert result.exit_code == 0, result.output
    assert "class_number" in result.output


@pytest.mark.slow
def test_sweep_independent_of_threads(runner, tmp_path):
    outputs = []
    for threads in ("1", "3"):
        out = tmp_path / f"sweep{threads}.jsonl"
        result = runner.invoke(cli, ["sweep", "--dmax", "40", "--twist", "1", "--twist", "5", "--weight", "1", "--threads", threads, "--out", str(out)])
        assert result.exit_code == 0, result.output
        outputs.append(out.read_bytes())
    assert outputs[0] == outputs[1]


def test_derivative_command_on_minus_one_case(runner):
    result = runner.invoke(cli, ["derivative", "--disc", "11", "--tol", "1e-8"])
    assert result.exit_code == 0, result.output
    assert "root number W = -1" in result.output
    assert "derivative route not meaningful" not in result.output


def test_i1_contour_suite_covers_twists_and_weights():
    cases = load_defaults("SELFTEST")["i1_contour_cases"]
    assert len(cases) == 10
    assert {5, -3, -4, 8} <= {d for _, d, _ in cases}
    assert {k for _, _, k in cases} == {1, 2}


@pytest.mark.slow
def test_i1_contour_suite_passes():
    [outcome] = run_selftest(only=["i1_contour"])
    assert outcome.passed, outcome.witness
