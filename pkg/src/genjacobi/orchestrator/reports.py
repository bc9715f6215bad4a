"""
Run summary

The summary is a dataclass serialized with dataclasses-json for
`--json` output and rendered as plain text into summary.txt.
"""

from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional

from dataclasses_json import dataclass_json

SUMMARY_FILE = "summary.txt"


@dataclass_json
@dataclass
class RunSummary:
    """Everything summary.txt reports about one run."""

    params: Dict[str, object]
    n_max: int
    window: List[int]
    sign_convention: str
    stages_completed: List[str] = field(default_factory=list)
    slopes: Dict[str, Optional[float]] = field(default_factory=dict)
    sups: Dict[str, float] = field(default_factory=dict)
    sign_finding: Optional[str] = None
    drift: Optional[float] = None
    parametrix_checks: int = 0
    parametrix_failures: int = 0
    tolerance_failures: List[str] = field(default_factory=list)
    errors: List[str] = field(default_factory=list)
    files: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.tolerance_failures and not self.errors


def _fmt(value: Optional[float]) -> str:
    if value is None:
        return "undefined"
    return f"{value:.6g}"


def render_summary(summary: RunSummary) -> str:
    """Plain-text rendering of a run summary."""
    lines = [
        "=" * 60,
        "genjacobi run summary",
        "=" * 60,
        "",
        "Parameters:",
    ]
    for key, value in summary.params.items():
        lines.append(f"  {key} = {value}")
    lines += [
        f"  n_max = {summary.n_max}",
        f"  window = {summary.window[0]}..{summary.window[1]}",
        f"  sign_convention = {summary.sign_convention}",
        "",
        f"Stages completed: {', '.join(summary.stages_completed) or 'none'}",
    ]

    if summary.slopes:
        lines += ["", "Envelope slopes (log|r_n| vs log n):"]
        for key, value in summary.slopes.items():
            lines.append(f"  {key}: {_fmt(value)}")
    if summary.sups:
        lines += ["", "Windowed sup n^2|r_n|:"]
        for key, value in summary.sups.items():
            lines.append(f"  {key}: {_fmt(value)}")
    if summary.sign_finding:
        lines += ["", f"Sign convention finding: {summary.sign_finding}"]
    if summary.drift is not None:
        lines += ["", f"Paranoid drift (max |delta|): {_fmt(summary.drift)}"]
    if summary.parametrix_checks:
        lines += ["", f"Parametrix checks: {summary.parametrix_checks} run, "
                      f"{summary.parametrix_failures} failed"]

    lines += ["", "Tolerance failures:"]
    lines += [f"  - {f}" for f in summary.tolerance_failures] or ["  none"]
    if summary.errors:
        lines += ["", "Errors:"]
        lines += [f"  - {e}" for e in summary.errors]

    lines += ["", f"Result: {'PASS' if summary.passed else 'FAIL'}", ""]
    return "\n".join(lines)


def write_summary(summary: RunSummary, out_dir: Path) -> Path:
    path = out_dir / SUMMARY_FILE
    path.write_text(render_summary(summary), encoding="utf-8", newline="")
    return path
