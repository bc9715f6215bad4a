"""Tests for experiment configuration and logging setup"""

import logging
from pathlib import Path

import pytest
import structlog

from genjacobi.asymptotics import SignConvention
from genjacobi.config import ExperimentConfig, SuiteFlags, configure_logging, load_config, parse_config, resolve_level
from genjacobi.errors import ExponentOutOfRange, IoError, ParseError, ValidationError
from genjacobi.params import FactorKind

LEGENDRE = """\
alpha: 0
beta: 0
gamma: 0
x0: 0
n_max: 100
"""


def test_minimal_document_defaults(monkeypatch):
    """Test defaults for a minimal Legendre document."""
    monkeypatch.delenv("GENJACOBI_OUT", raising=False)
    config = parse_config(LEGENDRE)
    assert config.window == (50, 100)
    assert config.suites == SuiteFlags(True, True, True)
    assert config.outputs == Path("results")
    assert config.sign_convention is SignConvention.REMARK
    assert config.paranoid is False
    assert config.params.c2 == 1.0
    assert config.params.h.kind is FactorKind.ONE


def test_output_directory_from_environment(monkeypatch, tmp_path):
    """Test GENJACOBI_OUT supplies the output directory."""
    monkeypatch.setenv("GENJACOBI_OUT", str(tmp_path))
    assert parse_config(LEGENDRE).outputs == tmp_path


def test_full_document():
    """Test nested mappings, window and flags."""
    text = """\
alpha: -0.5
beta: -0.5
gamma: 1.0
x0: 0.3
c2: 2.0
h:
  kind: exp_linear
  param: 1.5
n_max: 400
window: [60, 300]
outputs: out
suites:
  parametrix: false
paranoid: true
sign_convention: theorem
logging:
  level: debug
"""
    config = parse_config(text)
    assert config.params.h.kind is FactorKind.EXP_LINEAR
    assert config.params.c2 == 2.0
    assert config.window == (60, 300)
    assert config.outputs == Path("out")
    assert config.suites == SuiteFlags(recurrence=True, asymptotics=True, parametrix=False)
    assert config.paranoid is True
    assert config.sign_convention is SignConvention.THEOREM
    assert config.log_level == "DEBUG"


def test_invalid_exponent():
    """Test gamma = -2 is reported as a validation error."""
    with pytest.raises(ValidationError) as exc:
        parse_config(LEGENDRE.replace("gamma: 0", "gamma: -2"))
    assert isinstance(exc.value.cause, ExponentOutOfRange)


def test_unknown_key():
    """Test an unknown key is named with its line."""
    with pytest.raises(ParseError) as exc:
        parse_config(LEGENDRE + "delta: 1\n")
    assert exc.value.key == "delta"
    assert exc.value.line == 6
    assert "delta" in str(exc.value)


def test_unknown_log_level():
    """Test logging.level must name a standard level."""
    with pytest.raises(ParseError) as exc:
        parse_config(LEGENDRE + "logging:\n  level: chatty\n")
    assert exc.value.key == "logging.level"
    assert exc.value.line == 7
    assert parse_config(LEGENDRE + "logging:\n  level: debug\n").log_level == "DEBUG"


def test_missing_key():
    """Test required keys are enforced."""
    with pytest.raises(ParseError) as exc:
        parse_config(LEGENDRE.replace("x0: 0\n", ""))
    assert exc.value.key == "x0"


def test_malformed_document():
    """Test YAML syntax errors carry a line number."""
    with pytest.raises(ParseError) as exc:
        parse_config("alpha: [0\nbeta: 0\n")
    assert exc.value.line is not None


@pytest.mark.parametrize("text", ["", "- 1\n- 2\n"])
def test_non_mapping_document(text):
    """Test empty or list documents are refused."""
    with pytest.raises(ParseError):
        parse_config(text)


def test_wrong_value_types():
    """Test non-numeric values and bad flags are parse errors."""
    with pytest.raises(ParseError):
        parse_config(LEGENDRE.replace("alpha: 0", "alpha: zero"))
    with pytest.raises(ParseError):
        parse_config(LEGENDRE + "paranoid: maybe\n")
    with pytest.raises(ParseError):
        parse_config(LEGENDRE + "window: 50\n")
    with pytest.raises(ParseError):
        parse_config(LEGENDRE + "sign_convention: sideways\n")


@pytest.mark.parametrize("extra", ["window: [40, 100]\n", "window: [60, 120]\n", "window: [80, 70]\n"])
def test_window_out_of_range(extra):
    """Test the window must sit inside 50..n_max."""
    with pytest.raises(ValidationError):
        parse_config(LEGENDRE + extra)


def test_small_n_max():
    """Test n_max below 50 is refused."""
    with pytest.raises(ValidationError):
        parse_config(LEGENDRE.replace("n_max: 100", "n_max: 20"))


def test_load_config(tmp_path):
    """Test reading from disk and a missing file."""
    path = tmp_path / "experiment.yaml"
    path.write_text(LEGENDRE, encoding="utf-8")
    assert isinstance(load_config(path), ExperimentConfig)
    with pytest.raises(IoError):
        load_config(tmp_path / "missing.yaml")


def test_example_config_parses():
    """Test the shipped example configuration is valid."""
    example = Path(__file__).parent.parent / "config" / "experiment.example.yaml"
    config = load_config(example)
    assert config.n_max == 400
    assert config.params.x0 == 0.3


def test_with_overrides(tmp_path):
    """Test command-line overrides replace config values."""
    config = parse_config(LEGENDRE).with_overrides(outputs=tmp_path, paranoid=True)
    assert config.outputs == tmp_path
    assert config.paranoid is True


def test_resolve_level(monkeypatch):
    """Test the environment override and unknown names."""
    monkeypatch.delenv("GENJACOBI_LOG_LEVEL", raising=False)
    assert resolve_level("debug") == logging.DEBUG
    assert resolve_level() == logging.INFO
    monkeypatch.setenv("GENJACOBI_LOG_LEVEL", "warning")
    assert resolve_level("debug") == logging.WARNING
    monkeypatch.setenv("GENJACOBI_LOG_LEVEL", "loud")
    with pytest.raises(ParseError) as exc:
        resolve_level("debug")
    assert exc.value.key == "GENJACOBI_LOG_LEVEL"
    monkeypatch.delenv("GENJACOBI_LOG_LEVEL")
    with pytest.raises(ParseError):
        resolve_level("chatty")


def test_configure_logging_json(monkeypatch, capsys):
    """Test JSON log lines go to stderr."""
    monkeypatch.delenv("GENJACOBI_LOG_LEVEL", raising=False)
    configure_logging("INFO", json=True)
    structlog.get_logger("test").info("hello", value=1)
    captured = capsys.readouterr()
    assert captured.out == ""
    assert '"event": "hello"' in captured.err
