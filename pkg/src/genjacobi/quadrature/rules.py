r"""
Gauss-type quadrature rules

Gauss-Jacobi rules are generated from the closed-form Jacobi recurrence
coefficients and the Golub-Welsch eigendecomposition; the composite rule
splits [-1, 1] at the interior point so that each piece carries its two
endpoint singularities exactly, with the smooth leftover factors folded into
the weights:

$$
    \int_{-1}^1 f(x) w(x) \, dx \approx \sum_i w_i f(x_i)
$$
"""

import math
from dataclasses import dataclass
from typing import Callable, Tuple

import numpy as np
import structlog
from numpy.typing import NDArray
from scipy.special import betaln

from genjacobi.params import WeightParams
from .tridiagonal import SymTridiag, tridiag_eigen

logger = structlog.get_logger(__name__)

# Extra nodes per piece on top of 2*n_max
NODE_MARGIN = 64


@dataclass(frozen=True)
class QuadratureRule:
    """Nodes and positive weights approximating integration against a weight."""

    nodes: NDArray
    weights: NDArray
    interval: Tuple[float, float]
    exact_degree: int
    pieces: int = 1

    def __post_init__(self):
        object.__setattr__(self, "nodes", np.asarray(self.nodes, dtype=float))
        object.__setattr__(self, "weights", np.asarray(self.weights, dtype=float))

    def __len__(self) -> int:
        return int(self.nodes.size)

    @property
    def nodes_per_piece(self) -> int:
        return len(self) // self.pieces

    @property
    def mass(self) -> float:
        return float(np.sum(self.weights))

    def integrate(self, f: Callable[[NDArray], NDArray]) -> float:
        """Apply the rule to a vectorized integrand."""
        return float(np.sum(self.weights * f(self.nodes)))


def required_nodes_per_piece(n_max: int) -> int:
    """Sizing rule for the discretized Stieltjes procedure."""
    return 2 * n_max + NODE_MARGIN


def jacobi_mass(p: float, q: float) -> float:
    """Integral of (1-t)^p (1+t)^q over (-1, 1): 2^{p+q+1} B(p+1, q+1)."""
    return math.exp((p + q + 1.0) * math.log(2.0) + betaln(p + 1.0, q + 1.0))


def jacobi_recurrence(n: int, p: float, q: float) -> Tuple[NDArray, NDArray]:
    """
    Closed-form monic recurrence coefficients for (1-t)^p (1+t)^q on (-1, 1).

    Args:
        n: number of coefficients
        p: exponent at +1
        q: exponent at -1

    Returns:
        (b, a2) with b[k] = b_k for k < n, a2[0] = total mass and
        a2[k] = a_k^2 for 1 <= k < n
    """
    if p <= -1 or q <= -1:
        raise ValueError(f"Jacobi exponents must exceed -1, got p={p}, q={q}")

    k = np.arange(n, dtype=float)
    s = p + q
    b = np.empty(n)
    a2 = np.empty(n)

    b[0] = (q - p) / (s + 2.0)
    if n > 1:
        kk = k[1:]
        b[1:] = (q * q - p * p) / ((2 * kk + s) * (2 * kk + s + 2.0))

    a2[0] = jacobi_mass(p, q)
    if n > 1:
        a2[1] = 4.0 * (1.0 + p) * (1.0 + q) / ((2.0 + s) ** 2 * (3.0 + s))
    if n > 2:
        kk = k[2:]
        a2[2:] = (4.0 * kk * (kk + p) * (kk + q) * (kk + s)
                  / ((2 * kk + s) ** 2 * (2 * kk + s + 1.0) * (2 * kk + s - 1.0)))
    return b, a2


def gauss_jacobi(
    n_nodes: int,
    p: float,
    q: float,
    interval: Tuple[float, float] = (-1.0, 1.0),
) -> QuadratureRule:
    """
    Gauss rule for (hi - x)^p (x - lo)^q on (lo, hi).

    Exact for polynomials of degree <= 2*n_nodes - 1.

    Raises:
        NoConvergence: propagated from the eigensolver
    """
    if n_nodes < 1:
        raise ValueError(f"n_nodes must be positive, got {n_nodes}")
    lo, hi = interval
    if not lo < hi:
        raise ValueError(f"Empty interval ({lo}, {hi})")

    b, a2 = jacobi_recurrence(n_nodes, p, q)
    t, first = tridiag_eigen(SymTridiag.from_recurrence(b, a2[1:]))

    half = 0.5 * (hi - lo)
    nodes = lo + half * (1.0 + t)
    weights = a2[0] * half ** (p + q + 1.0) * first

    return QuadratureRule(nodes, weights, (lo, hi), exact_degree=2 * n_nodes - 1)


def gauss_chebyshev(n_nodes: int) -> QuadratureRule:
    """Gauss rule for 1/sqrt(1 - x^2) on (-1, 1), closed form."""
    k = np.arange(n_nodes, 0, -1)
    nodes = np.cos((2 * k - 1) * np.pi / (2 * n_nodes))
    weights = np.full(n_nodes, np.pi / n_nodes)
    return QuadratureRule(nodes, weights, (-1.0, 1.0), exact_degree=2 * n_nodes - 1)


def composite_rule(params: WeightParams, n_nodes_per_piece: int) -> QuadratureRule:
    """
    Two-piece rule for the full weight, split at x0.

    The left piece carries the exponents (gamma at x0, beta at -1) and the
    right piece (alpha at 1, gamma at x0) exactly; h(x)(1-x)^alpha on the
    left and c2 h(x)(1+x)^beta on the right are multiplied into the weights.

    Args:
        params: Validated weight parameters
        n_nodes_per_piece: Gauss nodes on each side of x0

    Returns:
        Rule with 2*n_nodes_per_piece nodes, left nodes first
    """
    x0 = params.x0
    left = gauss_jacobi(n_nodes_per_piece, params.gamma, params.beta, (-1.0, x0))
    right = gauss_jacobi(n_nodes_per_piece, params.alpha, params.gamma, (x0, 1.0))

    left_weights = left.weights * params.h.value(left.nodes) * (1.0 - left.nodes) ** params.alpha
    right_weights = (right.weights * params.h.value(right.nodes)
                     * (1.0 + right.nodes) ** params.beta * params.c2)

    logger.debug(
        "composite_rule_built",
        nodes_per_piece=n_nodes_per_piece,
        x0=x0,
        mass=float(np.sum(left_weights) + np.sum(right_weights)),
    )

    return QuadratureRule(
        nodes=np.concatenate([left.nodes, right.nodes]),
        weights=np.concatenate([left_weights, right_weights]),
        interval=(-1.0, 1.0),
        exact_degree=2 * n_nodes_per_piece - 1,
        pieces=2,
    )
