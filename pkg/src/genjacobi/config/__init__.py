"""Configuration module for genjacobi."""

from .experiment import (
    ExperimentConfig,
    SuiteFlags,
    load_config,
    parse_config,
)
from .log_setup import configure_logging, resolve_level

__all__ = [
    "ExperimentConfig",
    "SuiteFlags",
    "load_config",
    "parse_config",
    "configure_logging",
    "resolve_level",
]
