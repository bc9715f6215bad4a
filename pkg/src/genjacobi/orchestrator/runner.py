"""
Experiment runner - chains the computation stages

Stages:
- recurrence: Stieltjes table (and paranoid drift)
- asymptotics: predictions and residual report for both sign layouts
- parametrix: local parametrix verification suite

Each stage writes its CSV into the output directory; summary.txt is
always written.
"""

import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional

import structlog

from genjacobi.asymptotics import (
    ResidualReport,
    SignConvention,
    predict,
    residual_report,
)
from genjacobi.cfh import ParametrixReport, run_parametrix_suite
from genjacobi.config import ExperimentConfig
from genjacobi.errors import GenJacobiError, IoError, StageError
from genjacobi.recurrence import RecurrenceTable, stieltjes

from .reports import RunSummary, write_summary

logger = structlog.get_logger(__name__)

RECURRENCE_FILE = "recurrence.csv"
RESIDUALS_FILE = "residuals.csv"
PARAMETRIX_FILE = "parametrix_report.csv"

EXPECTED_SLOPE = -2.0
SLOPE_TOL = 0.3
SUP_RATIO_LIMIT = 1.5
DRIFT_TOL = 1e-9


@dataclass
class RunResult:
    """Outcome of one experiment run."""

    config: ExperimentConfig
    summary: RunSummary
    table: Optional[RecurrenceTable] = None
    report: Optional[ResidualReport] = None
    opposite_report: Optional[ResidualReport] = None
    parametrix: Optional[ParametrixReport] = None
    stages_completed: List[str] = field(default_factory=list)
    errors: List[StageError] = field(default_factory=list)
    files: List[Path] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.summary.passed

    @property
    def exit_code(self) -> int:
        return 0 if self.passed else 1


def _opposite(convention: SignConvention) -> SignConvention:
    if convention is SignConvention.REMARK:
        return SignConvention.THEOREM
    return SignConvention.REMARK


class ExperimentRunner:
    """
    Runs the enabled stages of one configuration in sequence.

    A GenJacobiError inside a stage is wrapped in StageError, recorded,
    and stops the remaining stages. Output-directory problems raise
    IoError directly.
    """

    def __init__(self, config: ExperimentConfig):
        self.config = config

    def run(self, only_parametrix: bool = False) -> RunResult:
        """
        Execute the run.

        Args:
            only_parametrix: Skip the recurrence and asymptotics stages

        Returns:
            RunResult with the summary already written

        Raises:
            IoError: the output directory cannot be created or written
        """
        config = self.config
        out_dir = self._prepare_output_dir(config.outputs)

        summary = RunSummary(
            params=config.params.to_record(),
            n_max=config.n_max,
            window=list(config.window),
            sign_convention=config.sign_convention.value,
        )
        result = RunResult(config=config, summary=summary)

        stages = []
        if not only_parametrix and (config.suites.recurrence or config.suites.asymptotics):
            stages.append(("recurrence", self._stage_recurrence))
        if not only_parametrix and config.suites.asymptotics:
            stages.append(("asymptotics", self._stage_asymptotics))
        if only_parametrix or config.suites.parametrix:
            stages.append(("parametrix", self._stage_parametrix))

        for name, stage in stages:
            logger.info("stage_started", stage=name)
            try:
                stage(result, out_dir)
            except GenJacobiError as e:
                error = StageError(name, e)
                logger.error("stage_failed", stage=name, error=str(e))
                result.errors.append(error)
                summary.errors.append(str(error))
                break
            except OSError as e:
                raise IoError(out_dir, e.strerror or str(e)) from e
            result.stages_completed.append(name)
            summary.stages_completed.append(name)
            logger.info("stage_completed", stage=name)

        try:
            summary_path = write_summary(summary, out_dir)
        except OSError as e:
            raise IoError(out_dir, e.strerror or str(e)) from e
        result.files.append(summary_path)
        summary.files = [str(p) for p in result.files]

        log = logger.info if result.passed else logger.warning
        log("run_finished", passed=result.passed, failures=len(summary.tolerance_failures),
            errors=len(summary.errors))
        return result

    def _prepare_output_dir(self, out_dir: Path) -> Path:
        try:
            out_dir.mkdir(parents=True, exist_ok=True)
        except OSError as e:
            raise IoError(out_dir, e.strerror or str(e)) from e
        if not os.access(out_dir, os.W_OK):
            raise IoError(out_dir, "directory is not writable")
        return out_dir

    def _stage_recurrence(self, result: RunResult, out_dir: Path) -> None:
        config = self.config
        table = stieltjes(config.params, config.n_max, paranoid=config.paranoid)
        result.table = table

        if config.suites.recurrence:
            path = out_dir / RECURRENCE_FILE
            table.to_csv(path)
            result.files.append(path)

        if table.drift is not None:
            result.summary.drift = table.drift
            if table.drift > DRIFT_TOL:
                result.summary.tolerance_failures.append(
                    f"paranoid drift {table.drift:.3e} > {DRIFT_TOL:g}"
                )

    def _stage_asymptotics(self, result: RunResult, out_dir: Path) -> None:
        config = self.config
        table = result.table
        degrees = range(1, config.n_max)

        primary = residual_report(
            table, predict(config.params, degrees, config.sign_convention), config.window
        )
        opposite = residual_report(
            table, predict(config.params, degrees, _opposite(config.sign_convention)), config.window
        )
        result.report = primary
        result.opposite_report = opposite

        path = out_dir / RESIDUALS_FILE
        primary.to_csv(path)
        result.files.append(path)

        summary = result.summary
        early, late = primary.halves()
        for which in ("a", "b"):
            slope = primary.slope_a if which == "a" else primary.slope_b
            summary.slopes[f"{which} ({config.sign_convention.value})"] = slope
            other = opposite.slope_a if which == "a" else opposite.slope_b
            summary.slopes[f"{which} ({opposite.sign_convention.value})"] = other

            if slope is not None and abs(slope - EXPECTED_SLOPE) > SLOPE_TOL:
                summary.tolerance_failures.append(
                    f"envelope slope of res_{which} is {slope:.3f}, expected "
                    f"{EXPECTED_SLOPE:g} +/- {SLOPE_TOL:g}"
                )

            sup_early = primary.windowed_sup(which, *early)
            sup_late = primary.windowed_sup(which, *late)
            summary.sups[f"{which} n in [{early[0]},{early[1]}]"] = sup_early
            summary.sups[f"{which} n in [{late[0]},{late[1]}]"] = sup_late
            # slope None: the residual is rounding noise over the whole window
            if slope is not None and sup_late > SUP_RATIO_LIMIT * sup_early:
                summary.tolerance_failures.append(
                    f"sup n^2|res_{which}| grows from {sup_early:.3e} to {sup_late:.3e}"
                )

        summary.sign_finding = sign_finding(primary, opposite)

    def _stage_parametrix(self, result: RunResult, out_dir: Path) -> None:
        report = run_parametrix_suite(self.config.params)
        result.parametrix = report

        path = out_dir / PARAMETRIX_FILE
        report.to_csv(path)
        result.files.append(path)

        summary = result.summary
        summary.parametrix_checks = len(report.checks)
        summary.parametrix_failures = len(report.failures)
        for check in report.failures:
            summary.tolerance_failures.append(
                f"parametrix {check.check} at {check.location}: "
                f"{check.residual:.3e} > {check.tolerance:.1e}"
            )


def sign_finding(first: ResidualReport, second: ResidualReport) -> str:
    """Which sign layout leaves an O(1/n^2) remainder in a_n."""
    slopes = {first.sign_convention.value: first.slope_a,
              second.sign_convention.value: second.slope_a}
    if all(s is None for s in slopes.values()):
        return "no oscillatory correction (residuals vanish under both layouts)"

    def distance(s: Optional[float]) -> float:
        return abs(s - EXPECTED_SLOPE) if s is not None else float("inf")

    best = min(slopes, key=lambda k: distance(slopes[k]))
    other = next(k for k in slopes if k != best)
    if slopes[best] == slopes[other]:
        return "both layouts coincide (vanishing amplitude)"
    return (f"{best} layout gives slope {_fmt(slopes[best])} (O(1/n^2) remainder); "
            f"{other} layout gives slope {_fmt(slopes[other])}")


def _fmt(value: Optional[float]) -> str:
    return "undefined" if value is None else f"{value:.3f}"
