"""Tests for the experiment runner and command line"""

import csv
import json
from dataclasses import replace
from pathlib import Path

import pytest

import cli
from genjacobi.config import SuiteFlags, parse_config
from genjacobi.errors import CoefficientOutOfBounds, IoError, StageError
from genjacobi.orchestrator import ExperimentRunner, render_summary
from genjacobi.orchestrator import runner as runner_module

LEGENDRE = """\
alpha: 0
beta: 0
gamma: 0
x0: 0
n_max: 100
suites:
  parametrix: false
"""

GENERIC = """\
alpha: -0.5
beta: -0.5
gamma: 1.0
x0: 0.3
c2: 2.0
n_max: 400
"""


def _config(text, out_dir, **overrides):
    return parse_config(text).with_overrides(outputs=out_dir, **overrides)


def _rows(path):
    with open(path, newline="", encoding="utf-8") as f:
        return list(csv.reader(f))


def test_legendre_run(tmp_path):
    """Test a Legendre run converges to n^2 r_n = 1/16 and passes."""
    result = ExperimentRunner(_config(LEGENDRE, tmp_path)).run()
    assert result.exit_code == 0
    assert result.stages_completed == ["recurrence", "asymptotics"]
    assert {p.name for p in tmp_path.iterdir()} == {"recurrence.csv", "residuals.csv", "summary.txt"}

    rows = _rows(tmp_path / "residuals.csv")
    header, last = rows[0], rows[-1]
    assert last[0] == "99"
    assert float(last[header.index("n2_res_a")]) == pytest.approx(0.0625, abs=1e-4)
    assert "Result: PASS" in (tmp_path / "summary.txt").read_text(encoding="utf-8")


def test_all_suites_disabled(tmp_path):
    """Test a run with nothing enabled writes only the summary."""
    config = _config(LEGENDRE, tmp_path)
    config = replace(config, suites=SuiteFlags(False, False, False))
    result = ExperimentRunner(config).run()
    assert result.exit_code == 0
    assert [p.name for p in tmp_path.iterdir()] == ["summary.txt"]
    assert result.stages_completed == []


def test_unwritable_output(tmp_path):
    """Test an output path occupied by a file is an IO error."""
    blocker = tmp_path / "occupied"
    blocker.write_text("", encoding="utf-8")
    with pytest.raises(IoError):
        ExperimentRunner(_config(LEGENDRE, blocker)).run()


def test_stage_error_stops_run(tmp_path, monkeypatch):
    """Test a failing stage is recorded and later stages are skipped."""
    def broken(*args, **kwargs):
        raise CoefficientOutOfBounds(3, 1.5)

    monkeypatch.setattr(runner_module, "stieltjes", broken)
    result = ExperimentRunner(_config(LEGENDRE, tmp_path)).run()
    assert result.exit_code == 1
    assert result.stages_completed == []
    assert isinstance(result.errors[0], StageError)
    assert result.errors[0].stage == "recurrence"
    assert "Result: FAIL" in (tmp_path / "summary.txt").read_text(encoding="utf-8")


def test_runs_are_deterministic(tmp_path):
    """Test identical configurations produce identical tables."""
    first, second = tmp_path / "first", tmp_path / "second"
    ExperimentRunner(_config(LEGENDRE, first)).run()
    ExperimentRunner(_config(LEGENDRE, second)).run()
    assert (first / "recurrence.csv").read_bytes() == (second / "recurrence.csv").read_bytes()
    assert (first / "residuals.csv").read_bytes() == (second / "residuals.csv").read_bytes()


def test_generic_run(tmp_path):
    """Test the singular jump weight passes every stage."""
    result = ExperimentRunner(_config(GENERIC, tmp_path, paranoid=True)).run()
    assert result.summary.tolerance_failures == []
    assert result.exit_code == 0
    assert result.stages_completed == ["recurrence", "asymptotics", "parametrix"]
    assert result.report.slope_a == pytest.approx(-2.0, abs=0.3)
    assert result.summary.drift <= 1e-9
    assert result.summary.sign_finding.startswith("remark")
    assert (tmp_path / "parametrix_report.csv").exists()
    assert "Sign convention finding" in render_summary(result.summary)


def _write_config(tmp_path: Path, text: str) -> Path:
    path = tmp_path / "experiment.yaml"
    path.write_text(text, encoding="utf-8")
    return path


def test_cli_run(tmp_path):
    """Test the run command exits 0 on a passing configuration."""
    out_dir = tmp_path / "out"
    assert cli.main(["run", str(_write_config(tmp_path, LEGENDRE)), "--out", str(out_dir)]) == 0
    assert (out_dir / "summary.txt").exists()


def test_cli_json(tmp_path, capsys):
    """Test --json prints the summary as JSON on stdout."""
    out_dir = tmp_path / "out"
    code = cli.main(["run", str(_write_config(tmp_path, LEGENDRE)), "--out", str(out_dir), "--json"])
    assert code == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["n_max"] == 100
    assert payload["stages_completed"] == ["recurrence", "asymptotics"]


def test_cli_configuration_error(tmp_path):
    """Test invalid configurations exit with status 2."""
    bad = _write_config(tmp_path, LEGENDRE.replace("gamma: 0", "gamma: -2"))
    assert cli.main(["run", str(bad), "--out", str(tmp_path / "out")]) == 2
    assert cli.main(["run", str(tmp_path / "missing.yaml")]) == 2


def test_cli_output_error(tmp_path):
    """Test an unusable output directory exits with status 2."""
    blocker = tmp_path / "occupied"
    blocker.write_text("", encoding="utf-8")
    assert cli.main(["run", str(_write_config(tmp_path, LEGENDRE)), "--out", str(blocker)]) == 2


def test_cli_verify_parametrix(tmp_path):
    """Test verify-parametrix runs only the parametrix stage."""
    out_dir = tmp_path / "out"
    config = _write_config(tmp_path, GENERIC)
    assert cli.main(["verify-parametrix", str(config), "--out", str(out_dir)]) == 0
    assert {p.name for p in out_dir.iterdir()} == {"parametrix_report.csv", "summary.txt"}


def test_cli_unknown_log_level(tmp_path, monkeypatch, capsys):
    """Test unknown log levels from the file or the environment exit with status 2."""
    monkeypatch.delenv("GENJACOBI_LOG_LEVEL", raising=False)
    chatty = _write_config(tmp_path, LEGENDRE + "logging:\n  level: chatty\n")
    assert cli.main(["run", str(chatty), "--out", str(tmp_path / "out")]) == 2
    assert "CONFIGURATION ERROR" in capsys.readouterr().out

    monkeypatch.setenv("GENJACOBI_LOG_LEVEL", "loud")
    assert cli.main(["run", str(_write_config(tmp_path, LEGENDRE)), "--out", str(tmp_path / "out")]) == 2
    assert "GENJACOBI_LOG_LEVEL" in capsys.readouterr().out
