"""
Asymptotic predictions for the recurrence coefficients

For a weight with an interior algebraic singularity and/or jump at x0
the coefficients oscillate around their limits:

    a_n = 1/2 - (M/n) cos(theta_n) + O(1/n^2)
    b_n = -(2M/n) cos(theta_n + arccos x0) + O(1/n^2)

with

    theta_n = 2n arccos x0 - 2 mu log(4n sqrt(1-x0^2)) - Theta
    M       = (sqrt(1-x0^2)/2) sqrt(gamma^2/4 + mu^2),   mu = -log(c)/pi

This module computes Theta, theta_n (two equivalent ways), the predicted
coefficients under either sign layout, the first-order residue matrices
and the reconstruction of (a_n, b_n) from them.
"""

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional, Tuple

import numpy as np
import structlog
from numpy.typing import NDArray

from genjacobi.errors import DegenerateNoSingularity, NegativeA2, NonRealReconstruction
from genjacobi.params import WeightParams
from genjacobi.szego import arg_gamma, d_infinity, phase_phi, principal_arg, pv_log_h

logger = structlog.get_logger(__name__)

# gamma^2/4 + mu^2 below this counts as "no singularity"
DEGENERACY_THRESHOLD = 1e-20

# Imaginary residue allowed in the first-order reconstruction
REAL_PART_TOLERANCE = 1e-12


class SignConvention(Enum):
    """Sign layout of the 1/n corrections."""
    REMARK = "remark"    # a = 1/2 - (M/n) cos theta_n (default)
    THEOREM = "theorem"  # opposite net sign of the series form


@dataclass(frozen=True)
class AsymptoticPrediction:
    """
    Predicted coefficients over a set of degrees.

    `big_theta` is None in the degenerate case (gamma = 0, c2 = 1), where
    the amplitude vanishes and `eta`/`theta` are NaN.
    """

    params: WeightParams
    n: NDArray
    big_theta: Optional[float]
    amplitude: float          # M
    mu: float
    eta: NDArray
    theta: NDArray
    a_tilde: NDArray
    b_tilde: NDArray
    sign_convention: SignConvention = SignConvention.REMARK

    def at(self, n: int) -> Tuple[float, float]:
        """(a_tilde, b_tilde) at degree n."""
        index = np.flatnonzero(self.n == n)
        if index.size == 0:
            raise KeyError(n)
        i = int(index[0])
        return float(self.a_tilde[i]), float(self.b_tilde[i])


@dataclass(frozen=True)
class ResidueSet:
    """First-order residue matrices at one degree n; each has zero trace."""
    n: int
    a1: NDArray
    b1: NDArray
    c1: NDArray

    @property
    def total(self) -> NDArray:
        return self.a1 + self.b1 + self.c1


def singularity_strength(params: WeightParams) -> float:
    """gamma^2/4 + mu^2; zero exactly when there is no interior singularity."""
    return 0.25 * params.gamma ** 2 + params.mu ** 2


def amplitude(params: WeightParams) -> float:
    """M = (sqrt(1-x0^2)/2) sqrt(gamma^2/4 + mu^2)."""
    return 0.5 * params.r0 * math.sqrt(singularity_strength(params))


def _is_degenerate(params: WeightParams) -> bool:
    return singularity_strength(params) < DEGENERACY_THRESHOLD


def big_theta(params: WeightParams) -> float:
    """
    Fixed phase Theta of the oscillatory corrections.

    Raises:
        DegenerateNoSingularity: gamma = 0 and c2 = 1
    """
    if _is_degenerate(params):
        raise DegenerateNoSingularity("Theta")

    shifted = complex(0.5 * params.gamma, -params.lambda_im)
    acos_x0 = math.acos(params.x0)
    return (
        (params.alpha + 0.5 * params.gamma) * math.pi
        - (params.alpha + params.beta + params.gamma) * acos_x0
        - 2.0 * arg_gamma(shifted)
        - principal_arg(shifted)
        - params.r0 / math.pi * pv_log_h(params.h, params.x0)
    )


def eta_n(params: WeightParams, n: int) -> float:
    """eta_n = (log c/pi) log(4n sqrt(1-x0^2)) + n arccos x0 - gamma pi/4 - Phi(x0)."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return (params.lambda_im * math.log(4.0 * n * params.r0)
            + n * math.acos(params.x0)
            - 0.25 * math.pi * params.gamma
            - phase_phi(params, params.x0))


def varsigma(params: WeightParams) -> float:
    """
    Constant phase offset between theta_n and 2 eta_n.

    Raises:
        DegenerateNoSingularity: gamma/2 + lambda = 0
    """
    if _is_degenerate(params):
        raise DegenerateNoSingularity("varsigma")
    shifted = complex(0.5 * params.gamma, params.lambda_im)
    return -2.0 * arg_gamma(shifted) - principal_arg(shifted)


def theta_n(params: WeightParams, n, theta: Optional[float] = None):
    """
    Unwrapped phase theta_n = 2n arccos x0 + 2 (log c/pi) log(4n r0) - Theta.

    Accepts a scalar degree or an array of degrees.
    """
    if theta is None:
        theta = big_theta(params)
    ns = np.asarray(n, dtype=float)
    values = (2.0 * ns * math.acos(params.x0)
              + 2.0 * params.lambda_im * np.log(4.0 * ns * params.r0)
              - theta)
    return float(values) if values.ndim == 0 else values


def _degrees(n_range: Iterable[int]) -> NDArray:
    ns = np.asarray(list(n_range), dtype=int)
    if ns.size and ns.min() < 1:
        raise ValueError(f"degrees must be >= 1, got min {int(ns.min())}")
    return ns


def predict(
    params: WeightParams,
    n_range: Iterable[int],
    sign_convention: SignConvention = SignConvention.REMARK,
) -> AsymptoticPrediction:
    """
    Predicted a_n, b_n for every degree in `n_range`.

    Args:
        params: Validated weight parameters
        n_range: Degrees n >= 1
        sign_convention: Which sign layout of the 1/n corrections to use

    Returns:
        AsymptoticPrediction
    """
    ns = _degrees(n_range)
    nf = ns.astype(float)

    if _is_degenerate(params):
        nan = np.full(ns.shape, np.nan)
        return AsymptoticPrediction(
            params=params,
            n=ns,
            big_theta=None,
            amplitude=0.0,
            mu=params.mu,
            eta=nan,
            theta=nan.copy(),
            a_tilde=np.full(ns.shape, 0.5),
            b_tilde=np.zeros(ns.shape),
            sign_convention=sign_convention,
        )

    theta_big = big_theta(params)
    m = amplitude(params)
    theta = np.atleast_1d(theta_n(params, nf, theta_big))
    eta = np.array([eta_n(params, int(k)) for k in ns], dtype=float)

    sign = -1.0 if sign_convention is SignConvention.REMARK else 1.0
    a_tilde = 0.5 + sign * (m / nf) * np.cos(theta)
    b_tilde = sign * (2.0 * m / nf) * np.cos(theta + math.acos(params.x0))

    logger.debug(
        "prediction_computed",
        degrees=int(ns.size), theta=theta_big, amplitude=m,
        sign_convention=sign_convention.value,
    )
    return AsymptoticPrediction(
        params=params,
        n=ns,
        big_theta=theta_big,
        amplitude=m,
        mu=params.mu,
        eta=eta,
        theta=theta,
        a_tilde=a_tilde,
        b_tilde=b_tilde,
        sign_convention=sign_convention,
    )


def _conjugate_by_d(d_inf: float, matrix: NDArray) -> NDArray:
    """D^{sigma3} matrix D^{-sigma3}."""
    scale = np.array([[1.0, d_inf * d_inf], [1.0 / (d_inf * d_inf), 1.0]])
    return matrix * scale


def residues(params: WeightParams, n: int, d_inf: Optional[float] = None) -> ResidueSet:
    """
    First-order residue matrices A1, B1 (endpoints) and C1(n) (interior point).

    C1 is the zero matrix in the degenerate case.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if d_inf is None:
        d_inf = d_infinity(params)

    a1 = _conjugate_by_d(
        d_inf,
        (4.0 * params.alpha ** 2 - 1.0) / 16.0 * np.array([[-1.0, 1j], [1j, 1.0]]),
    )
    b1 = _conjugate_by_d(
        d_inf,
        (4.0 * params.beta ** 2 - 1.0) / 16.0 * np.array([[1.0, 1j], [1j, -1.0]]),
    )

    if _is_degenerate(params):
        return ResidueSet(n=n, a1=a1, b1=b1, c1=np.zeros((2, 2), dtype=complex))

    s2 = singularity_strength(params)
    s = math.sqrt(s2)
    th = theta_n(params, n)
    asin_x0 = math.asin(params.x0)
    d2 = d_inf * d_inf

    c11 = -0.5 * s2 * params.x0 + 0.5 * s * math.sin(th)
    c12 = 1j * d2 * (0.5 * s2 - 0.5 * s * math.cos(asin_x0 - th))
    c21 = 1j / d2 * (0.5 * s2 + 0.5 * s * math.cos(asin_x0 + th))
    c1 = np.array([[c11, c12], [c21, -c11]], dtype=complex)
    return ResidueSet(n=n, a1=a1, b1=b1, c1=c1)


def first_order_reconstruction(params: WeightParams, n: int) -> Tuple[float, float]:
    """
    (a_n, b_n) rebuilt from the residue matrices, truncated at first order.

    Raises:
        NegativeA2: the first-order a_n^2 is not positive
        NonRealReconstruction: a_n^2 or b_n keeps an imaginary part
    """
    d_inf = d_infinity(params)
    d2 = d_inf * d_inf
    here = residues(params, n, d_inf).total
    after = residues(params, n + 1, d_inf).total

    a2 = 0.25 + (-d2 / 2j * here[1, 0] + here[0, 1] / (2j * d2)) / n
    b = -(after[0, 0] + here[1, 1]) / n

    for name, value in (("a2", a2), ("b", b)):
        if abs(value.imag) > REAL_PART_TOLERANCE * max(1.0, abs(value)):
            raise NonRealReconstruction(n, name, float(value.imag))

    if not a2.real > 0.0:
        raise NegativeA2(n, float(a2.real))
    return math.sqrt(a2.real), float(b.real)
