"""Orchestrator module for genjacobi."""

from .reports import RunSummary, render_summary, write_summary
from .runner import ExperimentRunner, RunResult, sign_finding

__all__ = [
    "RunSummary",
    "render_summary",
    "write_summary",
    "ExperimentRunner",
    "RunResult",
    "sign_finding",
]
