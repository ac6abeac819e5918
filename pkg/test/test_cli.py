from quasifiliform_tp.catalog import FamilyId, make_algebra
from quasifiliform_tp.cli.main import cli
from quasifiliform_tp.jsonio import export_json
from quasifiliform_tp.settings import Settings, SettingsError, load_settings

import pytest
from click.testing import CliRunner

from dotenv import find_dotenv, load_dotenv

import json

from fixtures import non_associative_product, non_jacobi_algebra


load_dotenv(find_dotenv())


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()


def test_algebra_list(runner: CliRunner):
    result = runner.invoke(cli, ["algebra", "list", "--json"])
    assert result.exit_code == 0
    families = json.loads(result.output)
    assert [f["family"] for f in families] == ["g1n1", "g2n1", "g3n1", "g1_7", "g2_9", "g3_11"]


def test_algebra_show(runner: CliRunner):
    result = runner.invoke(cli, ["algebra", "show", "--family", "g1n1", "--n", "5"])
    assert result.exit_code == 0
    assert "[e2, e3] = e5" in result.output

    result = runner.invoke(cli, ["algebra", "show", "--family", "g1n1", "--n", "5", "--json"])
    assert json.loads(result.output)["dim"] == 5


def test_algebra_check(runner: CliRunner):
    result = runner.invoke(cli, ["algebra", "check", "--family", "g3n1", "--n", "9", "--json"])
    assert result.exit_code == 0
    report = json.loads(result.output)
    assert report["passed"] is True
    assert report["nilindex"] == 8


def test_invalid_family_exits_3(runner: CliRunner):
    result = runner.invoke(cli, ["algebra", "check", "--family", "g1n1", "--n", "6"])
    assert result.exit_code == 3
    assert "n must be odd" in result.output


def test_usage_errors_exit_3(runner: CliRunner):
    result = runner.invoke(cli, ["derivations", "solve", "--family", "g1n1", "--n", "5", "--delta", "1/0"])
    assert result.exit_code == 3

    result = runner.invoke(cli, ["verify-all", "--n-grid", "5,x"])
    assert result.exit_code == 3

    result = runner.invoke(cli, ["tpa", "verify", "--samples", "1"])
    assert result.exit_code == 3

    result = runner.invoke(cli, ["algebra", "show", "--family", "g9"])
    assert result.exit_code == 3


def test_derivations_solve(runner: CliRunner, tmp_path):
    out = tmp_path / "space.json"
    result = runner.invoke(
        cli,
        ["derivations", "solve", "--family", "g2n1", "--n", "7", "--out", str(out)],
    )
    assert result.exit_code == 0
    assert "dimension 9" in result.output
    assert json.loads(out.read_text())["dim"] == 9

    result = runner.invoke(
        cli, ["derivations", "solve", "--family", "g1n1", "--n", "5", "--delta", "1", "--json"]
    )
    assert result.exit_code == 0
    assert json.loads(result.output)["delta"] == "1"


def test_derivations_verify(runner: CliRunner):
    result = runner.invoke(cli, ["derivations", "verify", "--family", "g3_11", "--json"])
    assert result.exit_code == 0
    assert json.loads(result.output)[0]["solved_dim"] == 10

    result = runner.invoke(cli, ["derivations", "verify", "--all", "--n-max", "8"])
    assert result.exit_code == 0
    assert "g3n1 n=8" in result.output


def test_tpa_list_and_show(runner: CliRunner):
    result = runner.invoke(cli, ["tpa", "list", "--family", "g2n1", "--n", "5"])
    assert result.exit_code == 0
    assert len(result.output.strip().splitlines()) == 10
    assert "g2n1[n=5]:TP4 (amended)" in result.output

    result = runner.invoke(cli, ["tpa", "show", "--family", "g2n1", "--n", "5", "--variant", "TP4"])
    assert result.exit_code == 0
    assert "(printed)" in result.output and "(amended)" in result.output
    assert "alpha_12 != 0" in result.output

    result = runner.invoke(cli, ["tpa", "show", "--family", "g2n1", "--n", "5", "--variant", "TP11"])
    assert result.exit_code == 3


def test_tpa_verify_json(runner: CliRunner):
    args = [
        "tpa", "verify", "--family", "g1n1", "--n", "9", "--variant", "TP2",
        "--samples", "3", "--seed", "7", "--bound", "5", "--json",
    ]
    result = runner.invoke(cli, args)
    assert result.exit_code == 0
    (report,) = json.loads(result.output)
    assert report["variant"] == "g1n1[n=9]:TP2"
    assert report["samples"] == 3
    assert report["commutative"] == "pass"
    assert report["transposed_leibniz"] == "pass"
    assert report["poisson_leibniz"]["status"] == "fail"

    again = runner.invoke(cli, args)
    assert again.output == result.output


def test_tpa_verify_counts_printed_erratum(runner: CliRunner):
    args = ["tpa", "verify", "--family", "g2n1", "--n", "7", "--variant", "TP2", "--samples", "2"]
    result = runner.invoke(cli, args)
    assert result.exit_code == 2
    assert "suspected erratum" in result.output
    assert "g2n1[n=7]:TP2: printed fail" in result.output
    assert "amended pass" in result.output

    assert runner.invoke(cli, args + ["--accept-amended"]).exit_code == 0


def test_verify_all_empty_grid(runner: CliRunner, tmp_path):
    out = tmp_path / "report.json"
    args = ["verify-all", "--n-grid", "", "--samples", "1", "--threads", "1", "--json"]
    result = runner.invoke(cli, args + ["--out", str(out)])
    assert result.exit_code == 0
    report = json.loads(out.read_text())
    assert report["failures"] == 0
    assert {r["family"] for r in report["lie_axioms"]} == {"g1_7", "g2_9", "g3_11"}

    again = runner.invoke(cli, args)
    assert again.output == result.output


def test_verify_all_skips_invalid_entries(runner: CliRunner):
    result = runner.invoke(
        cli, ["verify-all", "--n-grid", "6", "--samples", "1", "--threads", "1", "--json"]
    )
    assert result.exit_code == 0
    report = json.loads(result.output)
    assert any("g1n1 n=6" in notice for notice in report["skipped"])
    assert any("g3n1 n=6" in notice for notice in report["skipped"])
    assert {r["variant"] for r in report["tp_sweep"]} >= {"g2n1[n=6]:TP1"}


def test_check_json(runner: CliRunner, tmp_path, non_jacobi_algebra, non_associative_product):
    good = tmp_path / "good.json"
    good.write_text(export_json(make_algebra(FamilyId.of("g1n1", 7))))
    result = runner.invoke(cli, ["check-json", str(good)])
    assert result.exit_code == 0
    assert "jacobi: pass" in result.output

    broken = tmp_path / "broken.json"
    broken.write_text(export_json(non_jacobi_algebra))
    assert runner.invoke(cli, ["check-json", str(broken)]).exit_code == 2

    product = tmp_path / "product.json"
    product.write_text(export_json(non_associative_product))
    result = runner.invoke(cli, ["check-json", str(product)])
    assert result.exit_code == 2
    assert "associative: fail at (1, 2, 2)" in result.output

    invalid = tmp_path / "invalid.json"
    invalid.write_text(json.dumps({"dim": 3, "brackets": [{"i": 3, "j": 1, "value": []}]}))
    result = runner.invoke(cli, ["check-json", str(invalid)])
    assert result.exit_code == 3
    assert "brackets.0.j" in result.output


def test_settings_environment_overrides():
    settings = load_settings(environ={"TPA_SAMPLES": "4", "TPA_THREADS": "2"})
    assert settings.samples == 4
    assert settings.threads == 2
    assert settings.bound == Settings().bound

    with pytest.raises(SettingsError):
        load_settings(environ={"TPA_BOUND": "0"})
    with pytest.raises(SettingsError):
        load_settings(environ={"TPA_SEED": "one"})


def test_settings_file(runner: CliRunner, tmp_path):
    path = tmp_path / "settings.json"
    path.write_text(json.dumps({"samples": 1, "n_grid": [], "threads": 1}))
    result = runner.invoke(cli, ["--settings", str(path), "verify-all", "--json"], env={"TPA_SAMPLES": ""})
    assert result.exit_code == 0
    assert json.loads(result.output)["parameters"]["samples"] == 1

    path.write_text(json.dumps({"threads": 0}))
    result = runner.invoke(cli, ["--settings", str(path), "algebra", "list"])
    assert result.exit_code == 3


def test_verify_all_counts_printed_errata(runner: CliRunner):
    args = ["verify-all", "--n-grid", "7", "--samples", "1", "--threads", "1", "--json"]
    result = runner.invoke(cli, args)
    assert result.exit_code == 2
    report = json.loads(result.output)
    assert report["failures"] > 0
    assert report["accept_amended"] is False
    (erratum,) = [r for r in report["tp_sweep"] if r["variant"] == "g2n1[n=7]:TP2"]
    assert erratum["suspected_erratum"] is True
    assert len(erratum["transposed_leibniz"]["witness"]["indices"]) == 3

    result = runner.invoke(cli, args + ["--accept-amended"])
    assert result.exit_code == 0
    assert json.loads(result.output)["failures"] == 0
