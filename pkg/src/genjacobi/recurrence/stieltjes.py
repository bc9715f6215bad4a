"""
Discretized Stieltjes procedure

Computes the monic recurrence coefficients

    P_{n+1}(x) = (x - b_n) P_n(x) - a_n^2 P_{n-1}(x)

of the generalized Jacobi weight from inner products evaluated with the
composite Gauss-Jacobi rule.
"""

import csv
import io
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Union

import numpy as np
import structlog
from numpy.typing import NDArray

from genjacobi.errors import CoefficientOutOfBounds, DegreeTooHighForRule, IndexOutOfRange
from genjacobi.params import WeightParams
from genjacobi.quadrature import QuadratureRule, composite_rule, required_nodes_per_piece

logger = structlog.get_logger(__name__)

# Node values of P_n are renormalized every this many degrees
RESCALE_EVERY = 50

CSV_HEADER = ["n", "b_n", "a_n2", "a_n"]


def format_float(value: float) -> str:
    """17 significant digits, '.' separator."""
    return f"{value:.17g}"


@dataclass(frozen=True)
class RecurrenceTable:
    """
    Recurrence coefficients of one weight.

    `b[n]` holds b_n for n = 0..n_max-1. `a2[n]` holds a_n^2 for
    n = 1..n_max; `a2[0]` is the total mass of the weight.
    """

    params: WeightParams
    n_max: int
    b: NDArray
    a2: NDArray
    drift: Optional[float] = None

    @property
    def a(self) -> NDArray:
        """a_n = sqrt(a2[n]); entry 0 is sqrt of the mass."""
        return np.sqrt(self.a2)

    @property
    def mass(self) -> float:
        return float(self.a2[0])

    def to_csv(self, path: Optional[Union[str, Path]] = None) -> str:
        """
        Write `n,b_n,a_n2,a_n` rows for n = 1..n_max-1 plus n = 0 (b only)
        and n = n_max (a only); missing entries are left empty.
        """
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for n in range(self.n_max + 1):
            b_n = format_float(self.b[n]) if n < self.n_max else ""
            if n >= 1:
                a_n2 = format_float(self.a2[n])
                a_n = format_float(float(np.sqrt(self.a2[n])))
            else:
                a_n2 = a_n = ""
            writer.writerow([n, b_n, a_n2, a_n])

        text = buffer.getvalue()
        if path is not None:
            Path(path).write_text(text, encoding="utf-8", newline="")
        return text


def _run_stieltjes(rule: QuadratureRule, n_max: int):
    x = rule.nodes
    w = rule.weights

    b = np.empty(n_max)
    a2 = np.empty(n_max + 1)

    p_prev = np.zeros_like(x)
    p_cur = np.ones_like(x)
    norm_prev = 1.0

    for n in range(n_max + 1):
        wp2 = w * p_cur * p_cur
        # numpy sums contiguous float arrays pairwise
        norm = float(np.sum(wp2))

        if n == 0:
            a2[0] = norm
        else:
            a2[n] = norm / norm_prev
        if n == n_max:
            break

        b[n] = float(np.sum(x * wp2)) / norm
        p_next = (x - b[n]) * p_cur
        if n >= 1:
            p_next -= a2[n] * p_prev
        p_prev, p_cur = p_cur, p_next
        norm_prev = norm

        if (n + 1) % RESCALE_EVERY == 0:
            scale = float(np.max(np.abs(p_cur)))
            if scale > 0.0:
                p_cur /= scale
                p_prev /= scale
                norm_prev /= scale * scale
                logger.debug("stieltjes_rescaled", degree=n + 1, scale=scale)

    return b, a2


def stieltjes(
    params: WeightParams,
    n_max: int,
    rule: Optional[QuadratureRule] = None,
    paranoid: bool = False,
) -> RecurrenceTable:
    """
    Recurrence coefficients by the discretized Stieltjes procedure.

    Args:
        params: Validated weight parameters
        n_max: Highest index; b_0..b_{n_max-1} and a_1..a_{n_max} are computed
        rule: Composite rule to use (default: sized by the sizing rule)
        paranoid: Re-run with doubled node density and record the max drift

    Returns:
        RecurrenceTable

    Raises:
        DegreeTooHighForRule: supplied rule is coarser than the sizing rule
        CoefficientOutOfBounds: some b_n left (-1, 1)
    """
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")

    per_piece = required_nodes_per_piece(n_max)
    if rule is None:
        rule = composite_rule(params, per_piece)
    elif rule.exact_degree < 2 * per_piece - 1:
        raise DegreeTooHighForRule(n_max, rule.exact_degree, 2 * per_piece - 1)

    b, a2 = _run_stieltjes(rule, n_max)

    bad = np.flatnonzero(~((b > -1.0) & (b < 1.0)))
    if bad.size:
        index = int(bad[0])
        raise CoefficientOutOfBounds(index, float(b[index]))

    drift = None
    if paranoid:
        fine_rule = composite_rule(params, 2 * rule.nodes_per_piece)
        b_fine, a2_fine = _run_stieltjes(fine_rule, n_max)
        drift = float(max(np.max(np.abs(b_fine - b)),
                          np.max(np.abs(a2_fine[1:] - a2[1:]))))
        logger.info("stieltjes_paranoid_drift", n_max=n_max, drift=drift)

    logger.info("stieltjes_done", n_max=n_max, nodes=len(rule), mass=float(a2[0]))
    return RecurrenceTable(params=params, n_max=n_max, b=b, a2=a2, drift=drift)


def eval_monic(table: RecurrenceTable, n: int, x: float) -> float:
    """
    Value of the monic P_n at x by forward recurrence (P_0 = 1, P_{-1} = 0).

    Raises:
        IndexOutOfRange: n outside 0..table.n_max
    """
    if not 0 <= n <= table.n_max:
        raise IndexOutOfRange(n, table.n_max)

    p_prev, p_cur = 0.0, 1.0
    for k in range(n):
        a2_k = table.a2[k] if k >= 1 else 0.0
        p_prev, p_cur = p_cur, (x - table.b[k]) * p_cur - a2_k * p_prev
    return p_cur
