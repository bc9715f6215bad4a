"""
Experiment configuration

One YAML document per experiment. Keys are flat and dotted (`h.kind`,
`suites.parametrix`); nested mappings are flattened to the same keys.
"""

import os
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Any, Dict, Optional, Tuple, Union

import structlog
import yaml

from genjacobi.asymptotics import SignConvention
from genjacobi.errors import GenJacobiError, IoError, ParseError, ValidationError
from genjacobi.params import WeightParams, validate

from .log_setup import LOG_LEVELS

logger = structlog.get_logger(__name__)

OUTPUT_ENV = "GENJACOBI_OUT"
DEFAULT_OUTPUTS = "results"
MIN_WINDOW_START = 50

REQUIRED_KEYS = ("alpha", "beta", "gamma", "x0", "n_max")

KNOWN_KEYS = frozenset({
    "alpha", "beta", "gamma", "x0", "c2",
    "h.kind", "h.param",
    "n_max", "window", "outputs",
    "suites.recurrence", "suites.asymptotics", "suites.parametrix",
    "paranoid", "sign_convention",
    "logging.level",
})


@dataclass(frozen=True)
class SuiteFlags:
    """Which stages of a run are enabled."""
    recurrence: bool = True
    asymptotics: bool = True
    parametrix: bool = True

    @property
    def any(self) -> bool:
        return self.recurrence or self.asymptotics or self.parametrix


@dataclass(frozen=True)
class ExperimentConfig:
    """Validated experiment configuration."""

    params: WeightParams
    n_max: int
    window: Tuple[int, int]
    outputs: Path
    suites: SuiteFlags = field(default_factory=SuiteFlags)
    paranoid: bool = False
    sign_convention: SignConvention = SignConvention.REMARK
    log_level: str = "INFO"

    def with_overrides(
        self,
        outputs: Optional[Union[str, Path]] = None,
        paranoid: Optional[bool] = None,
    ) -> "ExperimentConfig":
        """Copy with command-line overrides applied."""
        changes: Dict[str, Any] = {}
        if outputs is not None:
            changes["outputs"] = Path(outputs)
        if paranoid is not None:
            changes["paranoid"] = paranoid
        return replace(self, **changes)


def _flatten(node: yaml.MappingNode, prefix: str, lines: Dict[str, int]) -> None:
    """Record the 1-based line of every leaf key under `node`."""
    for key_node, value_node in node.value:
        key = f"{prefix}{key_node.value}"
        if isinstance(value_node, yaml.MappingNode):
            _flatten(value_node, f"{key}.", lines)
        else:
            lines[key] = key_node.start_mark.line + 1


def _flatten_values(data: Dict[str, Any], prefix: str, out: Dict[str, Any]) -> None:
    for key, value in data.items():
        name = f"{prefix}{key}"
        if isinstance(value, dict):
            _flatten_values(value, f"{name}.", out)
        else:
            out[name] = value


def _read_document(text: str) -> Tuple[Dict[str, Any], Dict[str, int]]:
    try:
        root = yaml.compose(text, Loader=yaml.SafeLoader)
        data = yaml.safe_load(text)
    except yaml.YAMLError as e:
        mark = getattr(e, "problem_mark", None)
        line = mark.line + 1 if mark is not None else None
        problem = getattr(e, "problem", None) or str(e)
        raise ParseError(f"malformed document: {problem}", line=line) from e

    if root is None:
        raise ParseError("empty configuration document")
    if not isinstance(root, yaml.MappingNode) or not isinstance(data, dict):
        raise ParseError("configuration must be a mapping of keys to values",
                         line=root.start_mark.line + 1)

    lines: Dict[str, int] = {}
    _flatten(root, "", lines)
    values: Dict[str, Any] = {}
    _flatten_values(data, "", values)
    return values, lines


def _number(values: Dict[str, Any], lines: Dict[str, int], key: str, kind=float) -> Any:
    raw = values[key]
    if isinstance(raw, bool) or not isinstance(raw, (int, float)):
        raise ParseError(f"'{key}' must be a number, got {raw!r}", line=lines.get(key), key=key)
    if kind is int:
        if isinstance(raw, float) and not raw.is_integer():
            raise ParseError(f"'{key}' must be an integer, got {raw!r}", line=lines.get(key), key=key)
        return int(raw)
    return float(raw)


def _flag(values: Dict[str, Any], lines: Dict[str, int], key: str, default: bool) -> bool:
    if key not in values:
        return default
    raw = values[key]
    if not isinstance(raw, bool):
        raise ParseError(f"'{key}' must be true or false, got {raw!r}", line=lines.get(key), key=key)
    return raw


def parse_config(text: str) -> ExperimentConfig:
    """
    Parse and validate an experiment configuration document.

    Args:
        text: YAML document

    Returns:
        ExperimentConfig

    Raises:
        ParseError: malformed YAML, unknown or missing keys, wrong value types
        ValidationError: values rejected by the weight or window constraints
    """
    values, lines = _read_document(text)

    for key in values:
        if key not in KNOWN_KEYS:
            raise ParseError(f"unknown key '{key}'", line=lines.get(key), key=key)
    for key in REQUIRED_KEYS:
        if key not in values:
            raise ParseError(f"missing required key '{key}'", key=key)

    record: Dict[str, Any] = {
        name: _number(values, lines, name) for name in ("alpha", "beta", "gamma", "x0")
    }
    if "c2" in values:
        record["c2"] = _number(values, lines, "c2")
    if "h.kind" in values:
        record["h.kind"] = str(values["h.kind"])
    if "h.param" in values:
        record["h.param"] = values["h.param"]
    n_max = _number(values, lines, "n_max", kind=int)

    window = (MIN_WINDOW_START, n_max)
    if "window" in values:
        raw = values["window"]
        if (not isinstance(raw, list) or len(raw) != 2
                or not all(isinstance(v, int) and not isinstance(v, bool) for v in raw)):
            raise ParseError(f"'window' must be two integers, got {raw!r}",
                             line=lines.get("window"), key="window")
        window = (raw[0], raw[1])

    sign_text = str(values.get("sign_convention", SignConvention.REMARK.value))
    try:
        sign_convention = SignConvention(sign_text)
    except ValueError as e:
        raise ParseError(f"'sign_convention' must be 'remark' or 'theorem', got {sign_text!r}",
                         line=lines.get("sign_convention"), key="sign_convention") from e

    try:
        params = validate(WeightParams.from_record(record))
    except (GenJacobiError, ValueError) as e:
        raise ValidationError(e) from e

    if n_max < MIN_WINDOW_START:
        raise ValidationError(ValueError(f"n_max={n_max} must be >= {MIN_WINDOW_START}"))
    n_lo, n_hi = window
    if n_lo < MIN_WINDOW_START or n_hi > n_max or n_lo >= n_hi:
        raise ValidationError(ValueError(
            f"window {window} must satisfy {MIN_WINDOW_START} <= n_lo < n_hi <= n_max={n_max}"
        ))

    log_level = str(values.get("logging.level", "INFO")).upper()
    if log_level not in LOG_LEVELS:
        raise ParseError(f"'logging.level' must be one of {', '.join(LOG_LEVELS)}, got {log_level!r}",
                         line=lines.get("logging.level"), key="logging.level")

    outputs = values.get("outputs") or os.getenv(OUTPUT_ENV, DEFAULT_OUTPUTS)

    config = ExperimentConfig(
        params=params,
        n_max=n_max,
        window=window,
        outputs=Path(str(outputs)),
        suites=SuiteFlags(
            recurrence=_flag(values, lines, "suites.recurrence", True),
            asymptotics=_flag(values, lines, "suites.asymptotics", True),
            parametrix=_flag(values, lines, "suites.parametrix", True),
        ),
        paranoid=_flag(values, lines, "paranoid", False),
        sign_convention=sign_convention,
        log_level=log_level,
    )
    logger.debug("config_parsed", n_max=n_max, window=list(window), outputs=str(config.outputs))
    return config


def load_config(path: Union[str, Path]) -> ExperimentConfig:
    """
    Read and parse a configuration file.

    Raises:
        IoError: the file cannot be read
    """
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise IoError(path, e.strerror or str(e)) from e
    return parse_config(text)
