"""
CLI contract: exit codes, golden JSON, byte-stable output.

Uses tests/golden/ for expected outputs.
"""

import json
from pathlib import Path

import pytest

from src.cli import commands
from src.cli.commands import cmd_basis, cmd_betti, cmd_export, cmd_formula, cmd_selftest, cmd_shelling
from src.cli.main import main
from src.utils.config import ENV_MAX_N, ENV_SEED
from src.utils.errors import ResourceLimitError

GOLDEN_DIR = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


# =============================================================================
# Exit codes
# =============================================================================

@pytest.mark.parametrize(
    "argv",
    [
        ["formula", "--n", "4", "--j", "2", "--k", "2"],
        ["formula", "--n", "5", "--j", "5", "--k", "0"],
        ["betti", "--n", "4", "--method", "both"],
        ["betti", "--n", "1"],
        ["shelling", "--n", "4", "--check", "both"],
        ["shelling", "--n", "2"],
        ["shelling", "--n", "5", "--check", "definition", "--tiebreak", "revlex"],
        ["basis", "--n", "4", "--j", "2"],
        ["basis", "--n", "3", "--j", "2"],
        ["selftest", "--n-max", "3"],
    ],
)
def test_passing_commands_exit_zero(capsys, argv):
    code, _ = run(capsys, *argv, "--quiet")
    assert code == 0


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["bogus"],
        ["formula", "--n", "x", "--j", "1", "--k", "1"],
        ["formula", "--n", "4"],
        ["betti", "--n", "4", "--method", "guess"],
        ["betti", "--n", "8", "--method", "snf"],
        ["basis", "--n", "4", "--j", "9"],
        ["basis", "--n", "7"],
        ["shelling", "--n", "13"],
        ["formula", "--n", "-1", "--j", "0", "--k", "0"],
    ],
)
def test_usage_and_resource_errors_exit_two(capsys, argv):
    code, out = run(capsys, *argv)
    assert code == 2
    assert out == ""


def test_injected_boundary_fault_exits_one(capsys):
    code, out = run(capsys, "selftest", "--n-max", "3", "--inject-fault", "boundary", "--format", "json")
    assert code == 1
    payload = json.loads(out)
    assert payload["checks"]["boundarySquaresVanish"] is False
    assert payload["verified"] is False


def test_env_ceiling_applies_to_cli(capsys, monkeypatch):
    monkeypatch.setenv(ENV_MAX_N, "3")
    code, _ = run(capsys, "betti", "--n", "4")
    assert code == 2


@pytest.mark.slow
def test_selftest_to_five(capsys):
    code, _ = run(capsys, "selftest", "--n-max", "5", "--quiet")
    assert code == 0


# =============================================================================
# Golden outputs
# =============================================================================

def test_formula_golden(capsys):
    code, out = run(capsys, "formula", "--n", "4", "--j", "2", "--k", "2", "--format", "json")
    assert code == 0
    assert out == (GOLDEN_DIR / "formula_4_2_2.json").read_text(encoding="utf-8")


@pytest.mark.parametrize("command", ["shelling", "basis"])
def test_report_fragments_golden(capsys, monkeypatch, command):
    monkeypatch.delenv(ENV_SEED, raising=False)
    code, out = run(capsys, command, "--n", "2", "--format", "json")
    assert code == 0
    assert out == (GOLDEN_DIR / f"{command}_d2.json").read_text(encoding="utf-8")


@pytest.mark.parametrize("n", [0, 2, 3])
def test_export_golden(capsys, tmp_path, n):
    target = tmp_path / f"d{n}.json"
    code, _ = run(capsys, "export", "--n", str(n), "--what", "complex", "--path", str(target))
    assert code == 0
    expected = (GOLDEN_DIR / f"export_d{n}_complex.json").read_text(encoding="utf-8")
    assert target.read_text(encoding="utf-8") == expected


def test_export_is_byte_stable(tmp_path):
    first, second = tmp_path / "a.json", tmp_path / "b.json"
    cmd_export(4, "report", first)
    cmd_export(4, "report", second)
    assert first.read_bytes() == second.read_bytes()
    payload = json.loads(first.read_text(encoding="utf-8"))
    assert payload["homology"]["betti"] == [1, 3, 0, 0]
    assert payload["components"] == 2
    assert payload["complex"]["fvector"] == [1, 15, 25, 10, 1]


@pytest.mark.parametrize(
    "argv",
    [
        ["betti", "--n", "5", "--method", "both"],
        ["basis", "--n", "6", "--j", "3", "--samples", "5"],
        ["shelling", "--n", "4"],
    ],
)
def test_json_is_byte_stable(capsys, argv):
    _, first = run(capsys, *argv, "--format", "json")
    _, second = run(capsys, *argv, "--format", "json")
    assert first == second
    assert "wallTime" not in first


def test_timing_flag(capsys):
    _, out = run(capsys, "formula", "--n", "3", "--j", "1", "--k", "1", "--format", "json", "--timing")
    assert "wallTime" in json.loads(out)


def test_output_flag(capsys, tmp_path):
    target = tmp_path / "out" / "betti.json"
    code, out = run(capsys, "betti", "--n", "3", "--format", "json", "--output", str(target))
    assert code == 0
    assert out == ""
    assert json.loads(target.read_text(encoding="utf-8"))["results"]["snf"] == [1, 0, 0]


def test_text_and_json_carry_the_same_numbers(capsys):
    _, text = run(capsys, "betti", "--n", "4")
    _, raw = run(capsys, "betti", "--n", "4", "--format", "json")
    payload = json.loads(raw)
    assert payload["results"]["snf"] == [1, 3, 0, 0]
    assert "[snf]" in text
    assert "verified: True" in text
    for check in payload["checks"]:
        assert check in text


# =============================================================================
# Commands as functions
# =============================================================================

def test_cmd_formula():
    report = cmd_formula(6, 3, 3)
    assert report.results["value"] == 15
    assert report.verified
    assert "bruteForce" not in cmd_formula(10, 4, 2).results


def test_cmd_betti():
    report = cmd_betti(4, "both")
    assert report.results["formula"] == [1, 3, 0, 0]
    assert report.results["snf"] == [1, 3, 0, 0]
    assert report.results["equal"] == [True] * 4
    assert cmd_betti(1, "formula").results["formula"] == [0]
    assert cmd_betti(0, "both").results["bettiMinusOne"] == 1


def test_cmd_shelling():
    report = cmd_shelling(4)
    assert report.verified
    assert report.results["gammaCounts"] == report.results["dCount"]
    assert report.results["lemma"]["failingPosition"] is None
    assert report.results["shellable"] is True
    assert report.results["order"][0] == [1, 2, 4, 8]
    assert len(report.results["restrictions"]) == report.results["facets"] == 15
    assert report.results["restrictions"][0] == []
    assert report.results["gamma"]["2,2"] == [[3, 12], [5, 10], [9, 6]]


def test_cmd_shelling_checks_ceilings_before_building(monkeypatch):
    monkeypatch.setattr(commands, "build_dn", lambda n: pytest.fail("built D_n before the ceiling check"))
    with pytest.raises(ResourceLimitError):
        cmd_shelling(8, "both")
    with pytest.raises(ResourceLimitError):
        cmd_shelling(8, "lemma")


def test_cmd_basis():
    report = cmd_basis(4, 2)
    assert report.verified
    assert report.results["basis"][0]["quotientRank"] == 3
    assert [row["F"] for row in report.results["cycleChecks"]] == ["12,34", "13,24", "14,23"]
    first = report.results["cycles"][0]
    assert sorted(first) == ["F", "chain", "crossPolytopeIso", "isCycle", "reps"]
    assert first["F"] == [3, 12]
    assert first["reps"] == {"3": 1, "12": 3}
    assert first["isCycle"] and first["crossPolytopeIso"]
    assert {(term["coeff"], tuple(term["simplex"])) for term in first["chain"]} == {
        (1, (3, 12)),
        (-1, (3, 4)),
        (-1, (1, 12)),
        (1, (1, 4)),
    }
    assert report.results["crossPolytope"] == [{"j": 2, "checked": 12, "passed": 12}]
    empty = cmd_basis(3, 2)
    assert empty.verified
    assert empty.results["cycles"] == []


def test_cmd_basis_samples_at_six():
    report = cmd_basis(6, 3, samples=4, seed=1)
    assert report.verified
    assert report.results["basis"][0]["quotientRank"] == 15
    assert report.results["choiceIndependence"][0]["checked"] == 4


def test_cmd_basis_fifty_samples_at_six():
    report = cmd_basis(6, None, samples=50, seed=0)
    assert report.verified
    assert [row["j"] for row in report.results["crossPolytope"]] == [1, 2, 3]
    assert all(row["checked"] == row["passed"] == 50 for row in report.results["crossPolytope"])
    assert [row["j"] for row in report.results["choiceIndependence"]] == [1, 2, 3]
    for row in report.results["choiceIndependence"]:
        assert row["checked"] == row["boundaries"] == row["inStar"] == 50


def test_cmd_selftest_summary():
    report = cmd_selftest(4)
    assert report.verified
    rows = report.results["summary"]
    assert [row["faces"] for row in rows] == [1, 2, 5, 15, 52]
    assert rows[4]["betti"] == [1, 3, 0, 0]
    assert rows[4]["cycles"] == 4
