"""
Numerical verification of the local parametrix.

Runs the jump-matrix, monodromy, determinant, sector-formula, ray-jump
and large-zeta checks and collects them in a flat report.
"""

import csv
import io
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional, Sequence, Union

import numpy as np
import structlog

from genjacobi.errors import GammaPole
from genjacobi.params import WeightParams

from .psi import (
    RAYS,
    SECTORS,
    cyclic_product,
    det_grid,
    expansion_error,
    jump_matrices,
    jump_residual,
    monodromy_matrix,
    monodromy_residual,
    sector_formula_residual,
)

logger = structlog.get_logger(__name__)

JUMP_DET_TOL = 1e-12
CYCLIC_TOL = 1e-12
MONODROMY_TOL = 1e-10
DET_TOL = 1e-10
RAY_TOL = 1e-8
SECTOR_TOL = 1e-10
SLOPE_TOL = 0.3

RAY_RADII = (0.5, 1.5, 5.0)
DET_RADII = (0.3, 2.0, 10.0)
EXPANSION_RADII = (20.0, 40.0, 80.0)
EXPANSION_ARG = 3 * math.pi / 5
EXPANSION_TERMS = (2, 3)
SECTOR_RADII = (0.5, 5.0)
RAY_OFFSET = 1e-6
RAY_OFFSET_RADIUS = 1.5

# Expansion errors below this are treated as exact (e.g. all T_n vanish)
EXACT_FLOOR = 1e-13

CSV_HEADER = ["check", "location", "residual", "tolerance", "passed"]


@dataclass(frozen=True)
class ParametrixCheck:
    check: str
    location: str
    residual: float
    tolerance: float
    passed: bool


@dataclass
class ParametrixReport:
    params: WeightParams
    checks: List[ParametrixCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> List[ParametrixCheck]:
        return [c for c in self.checks if not c.passed]

    def add(self, check: str, location: str, residual: float, tolerance: float) -> None:
        self.checks.append(ParametrixCheck(
            check=check,
            location=location,
            residual=residual,
            tolerance=tolerance,
            passed=bool(residual <= tolerance),
        ))

    def to_csv(self, path: Optional[Union[str, Path]] = None) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for c in self.checks:
            writer.writerow([c.check, c.location, f"{c.residual:.6e}",
                             f"{c.tolerance:.1e}", "true" if c.passed else "false"])
        text = buffer.getvalue()
        if path is not None:
            Path(path).write_text(text, encoding="utf-8", newline="")
        return text


def _fmt(z: complex) -> str:
    return f"{z.real:.6g}{z.imag:+.6g}j"


def expansion_slope(params: WeightParams, terms: int,
                    radii: Sequence[float] = EXPANSION_RADII,
                    arg: float = EXPANSION_ARG) -> Optional[float]:
    """
    Least-squares slope of log(error) against log|zeta| along a ray.

    None when every error is below EXACT_FLOOR.
    """
    errors = []
    for radius in radii:
        zeta = complex(radius * math.cos(arg), radius * math.sin(arg))
        errors.append(expansion_error(params, zeta, terms))
    errors = np.asarray(errors)
    if np.all(errors < EXACT_FLOOR):
        return None
    slope, _ = np.polyfit(np.log(np.asarray(radii)), np.log(errors), 1)
    return float(slope)


def run_parametrix_suite(params: WeightParams) -> ParametrixReport:
    """Run every parametrix check for one parameter set."""
    report = ParametrixReport(params=params)

    for jump in jump_matrices(params):
        report.add("jump_det", f"J{jump.index}", abs(jump.det - 1.0), JUMP_DET_TOL)

    closure = cyclic_product(params) @ monodromy_matrix(params) - np.eye(2)
    report.add("cyclic_product", "origin", float(np.max(np.abs(closure))), CYCLIC_TOL)

    for radius in RAY_RADII:
        zeta = complex(radius * math.cos(-math.pi / 3), radius * math.sin(-math.pi / 3))
        report.add("monodromy", _fmt(zeta), monodromy_residual(params, zeta), MONODROMY_TOL)

    for zeta, residual in det_grid(params, DET_RADII):
        report.add("det", _fmt(zeta), residual, DET_TOL)

    for sector, (lo, hi) in SECTORS.items():
        mid = 0.5 * (lo + hi)
        for radius in SECTOR_RADII:
            zeta = complex(radius * math.cos(mid), radius * math.sin(mid))
            report.add(f"sector_formula_{sector}", _fmt(zeta),
                       sector_formula_residual(params, zeta), SECTOR_TOL)

    for ray in RAYS:
        for radius in RAY_RADII:
            report.add(f"jump_ray_{ray}", f"|zeta|={radius:g}",
                       jump_residual(params, ray, radius), RAY_TOL)

    for ray in RAYS:
        report.add(f"jump_offset_{ray}", f"|zeta|={RAY_OFFSET_RADIUS:g} offset={RAY_OFFSET:g}",
                   jump_residual(params, ray, RAY_OFFSET_RADIUS, offset=RAY_OFFSET), RAY_TOL)

    for terms in EXPANSION_TERMS:
        try:
            slope = expansion_slope(params, terms)
        except GammaPole as e:
            logger.info("expansion_check_skipped", terms=terms, reason=str(e))
            continue
        residual = 0.0 if slope is None else abs(slope + terms)
        report.add(f"expansion_slope_R{terms}", f"arg=3pi/5 slope={slope}", residual, SLOPE_TOL)

    log = logger.info if report.passed else logger.warning
    log("parametrix_suite_done", checks=len(report.checks), failures=len(report.failures))
    return report
