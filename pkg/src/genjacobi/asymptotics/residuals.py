"""Residuals of computed recurrence coefficients against a prediction."""

import csv
import io
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Tuple, Union

import numpy as np
import structlog
from numpy.typing import NDArray

from genjacobi.errors import WindowTooSmall
from genjacobi.recurrence import RecurrenceTable, format_float

from .predictions import AsymptoticPrediction, SignConvention

logger = structlog.get_logger(__name__)

# Smallest n_max the residual statistics are defined for
MIN_TABLE_SIZE = 50

# |r_n| below this is rounding noise and counts as zero
NOISE_FLOOR = 1e-12

# Fewer local maxima than this: fit the whole (monotone) sequence instead
MIN_MAXIMA = 3

CSV_HEADER = [
    "n", "a_n", "b_n", "a_tilde", "b_tilde",
    "res_a", "res_b", "n2_res_a", "n2_res_b",
]

Window = Tuple[int, int]


def envelope_points(n: NDArray, r: NDArray) -> Tuple[NDArray, NDArray]:
    """
    Points (n, |r|) on the upper envelope of an oscillating residual.

    Local maxima of |r| are used; when there are fewer than MIN_MAXIMA of
    them the sequence is treated as its own envelope. Entries under the
    noise floor are dropped.
    """
    mag = np.abs(r)
    keep = mag > NOISE_FLOOR
    if mag.size >= 3:
        interior = (mag[1:-1] >= mag[:-2]) & (mag[1:-1] >= mag[2:])
        peaks = np.flatnonzero(interior) + 1
        peaks = peaks[keep[peaks]]
        if peaks.size >= MIN_MAXIMA:
            return n[peaks], mag[peaks]
    return n[keep], mag[keep]


def envelope_slope(n: NDArray, r: NDArray, window: Window) -> Optional[float]:
    """
    Least-squares slope of log|r| against log n over the envelope in `window`.

    Returns None when every residual in the window is below the noise floor.

    Raises:
        WindowTooSmall: fewer than two usable envelope points
    """
    lo, hi = window
    inside = (n >= lo) & (n <= hi)
    if not np.any(np.abs(r[inside]) > NOISE_FLOOR):
        return None
    xs, ys = envelope_points(n[inside], r[inside])
    if xs.size < 2:
        raise WindowTooSmall(window, f"only {xs.size} envelope point(s)")
    slope, _ = np.polyfit(np.log(xs.astype(float)), np.log(ys), 1)
    return float(slope)


@dataclass(frozen=True)
class ResidualReport:
    """
    Per-degree residuals r_n = computed - predicted, and their statistics.

    `slope_a` / `slope_b` are None when the corresponding residual vanishes
    to rounding over the whole window.
    """

    n: NDArray
    a: NDArray
    b: NDArray
    a_tilde: NDArray
    b_tilde: NDArray
    window: Window
    slope_a: Optional[float]
    slope_b: Optional[float]
    sign_convention: SignConvention

    @property
    def res_a(self) -> NDArray:
        return self.a - self.a_tilde

    @property
    def res_b(self) -> NDArray:
        return self.b - self.b_tilde

    @property
    def n2_res_a(self) -> NDArray:
        return self.n.astype(float) ** 2 * self.res_a

    @property
    def n2_res_b(self) -> NDArray:
        return self.n.astype(float) ** 2 * self.res_b

    def _scaled(self, which: str) -> NDArray:
        if which == "a":
            return self.n2_res_a
        if which == "b":
            return self.n2_res_b
        raise ValueError(f"which must be 'a' or 'b', got {which!r}")

    def windowed_sup(self, which: str, lo: int, hi: int) -> float:
        """
        sup of n^2 |r_n| over lo <= n <= hi.

        Raises:
            WindowTooSmall: no degree of the report lies in [lo, hi]
        """
        inside = (self.n >= lo) & (self.n <= hi)
        if not np.any(inside):
            raise WindowTooSmall((lo, hi), "no degrees in window")
        return float(np.max(np.abs(self._scaled(which)[inside])))

    def sup_ratio(self, which: str, early: Window, late: Window) -> float:
        """sup over `late` divided by sup over `early`; 0/0 counts as 0."""
        first = self.windowed_sup(which, *early)
        second = self.windowed_sup(which, *late)
        if first == 0.0:
            return 0.0 if second == 0.0 else float("inf")
        return second / first

    def halves(self) -> Tuple[Window, Window]:
        """Early and late sub-windows [lo, 2lo] and [hi/2, hi]."""
        lo, hi = self.window
        return (lo, min(2 * lo, hi)), (max(hi // 2, lo), hi)

    def to_csv(self, path: Optional[Union[str, Path]] = None) -> str:
        """Write the residual table, 17 significant digits, LF line endings."""
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        columns = (self.a, self.b, self.a_tilde, self.b_tilde,
                   self.res_a, self.res_b, self.n2_res_a, self.n2_res_b)
        for i, n in enumerate(self.n):
            writer.writerow([int(n)] + [format_float(float(col[i])) for col in columns])

        text = buffer.getvalue()
        if path is not None:
            Path(path).write_text(text, encoding="utf-8", newline="")
        return text


def residual_report(
    table: RecurrenceTable,
    pred: AsymptoticPrediction,
    window: Optional[Window] = None,
) -> ResidualReport:
    """
    Compare a recurrence table with a prediction.

    Degrees present in both (1 <= n <= n_max - 1) are used.

    Args:
        table: Computed coefficients
        pred: Predicted coefficients
        window: Degree window for the statistics (default (50, n_max))

    Raises:
        WindowTooSmall: table.n_max < 50 or the window holds no usable data
    """
    if table.n_max < MIN_TABLE_SIZE:
        raise WindowTooSmall((MIN_TABLE_SIZE, table.n_max), f"n_max={table.n_max} < {MIN_TABLE_SIZE}")
    if window is None:
        window = (MIN_TABLE_SIZE, table.n_max)

    mask = (pred.n >= 1) & (pred.n <= table.n_max - 1)
    n = pred.n[mask].astype(int)
    if n.size == 0:
        raise WindowTooSmall(window, "prediction shares no degrees with the table")

    a = table.a[n]
    b = table.b[n]
    a_tilde = pred.a_tilde[mask]
    b_tilde = pred.b_tilde[mask]

    slope_a = envelope_slope(n, a - a_tilde, window)
    slope_b = envelope_slope(n, b - b_tilde, window)

    logger.info(
        "residual_report",
        window=list(window), slope_a=slope_a, slope_b=slope_b,
        sign_convention=pred.sign_convention.value,
    )
    return ResidualReport(
        n=n, a=a, b=b, a_tilde=a_tilde, b_tilde=b_tilde, window=tuple(window),
        slope_a=slope_a, slope_b=slope_b, sign_convention=pred.sign_convention,
    )
