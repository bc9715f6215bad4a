"""
Szego function of the generalized Jacobi weight

D(z) = D(z, h) * D(z, w_{1,gamma}) * D(z, Xi_c), analytic and non-vanishing
off [-1, 1], with boundary modulus sqrt(w) on the interval. All complex
powers are exp(power * principal log); sqrt(z^2 - 1) is the branch that
behaves like z at infinity.
"""

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
import structlog

from genjacobi.errors import XAtSingularity, ZOnCut
from genjacobi.params import AnalyticFactor, FactorKind, WeightParams
from genjacobi.quadrature import QuadratureRule, gauss_chebyshev

logger = structlog.get_logger(__name__)

# Gauss-Chebyshev nodes for the PV integral and the Cauchy transform of log h
CHEBYSHEV_NODES = 512

# Nodes closer than this to x0 use the derivative instead of the difference quotient
_COINCIDENT = 1e-8


@lru_cache(maxsize=4)
def _chebyshev_rule(n: int) -> QuadratureRule:
    return gauss_chebyshev(n)


@dataclass(frozen=True)
class SzegoEval:
    """Szego factors at one point z off the cut."""
    z: complex
    d_h: complex
    d_w1gamma: complex
    d_xi: complex
    d_total: complex


def pv_log_h(h: AnalyticFactor, x0: float) -> float:
    """
    Principal value of the integral of log h(t) / (sqrt(1-t^2) (t - x0)).

    The singularity is subtracted: (log h(t) - log h(x0)) / (t - x0) is
    integrated with a Gauss-Chebyshev rule; the subtracted term has zero
    principal value for |x0| < 1.
    """
    if not -1.0 < x0 < 1.0:
        raise ValueError(f"x0 must lie in (-1, 1), got {x0}")

    rule = _chebyshev_rule(CHEBYSHEV_NODES)
    t = rule.nodes
    diff = t - x0
    near = np.abs(diff) < _COINCIDENT
    safe = np.where(near, 1.0, diff)

    quotient = (h.log_value(t) - h.log_value(x0)) / safe
    if np.any(near):
        quotient = np.where(near, h.log_derivative(t), quotient)
    return float(np.sum(rule.weights * quotient))


def _log_h_mean(h: AnalyticFactor) -> float:
    """Integral of log h(t) / sqrt(1 - t^2) over (-1, 1)."""
    rule = _chebyshev_rule(CHEBYSHEV_NODES)
    return float(np.sum(rule.weights * h.log_value(rule.nodes)))


def phase_phi(params: WeightParams, x: float) -> float:
    """
    Boundary phase of the Szego function without the interior shift.

    Phi(x) = pi*alpha/2 - ((alpha+beta+gamma)/2) arccos x
             - sqrt(1-x^2)/(2 pi) * PV(log h, x)
    """
    if not -1.0 <= x <= 1.0:
        raise ValueError(f"x must lie in [-1, 1], got {x}")

    phi = (0.5 * math.pi * params.alpha
           - 0.5 * (params.alpha + params.beta + params.gamma) * math.acos(x))
    root = math.sqrt(max(0.0, 1.0 - x * x))
    if root > 0.0:
        phi -= root / (2.0 * math.pi) * pv_log_h(params.h, x)
    return phi


def phase_phi_hat(params: WeightParams, x: float) -> float:
    """
    Phi(x) shifted by pi*gamma/2 to the left of x0.

    Raises:
        XAtSingularity: x equals x0
    """
    if x == params.x0:
        raise XAtSingularity(x)
    phi = phase_phi(params, x)
    if x < params.x0:
        phi += 0.5 * math.pi * params.gamma
    return phi


def jump_phase(params: WeightParams, x: float) -> float:
    """Boundary phase contributed by D(z, Xi_c) on the upper side of the cut."""
    if x == params.x0:
        raise XAtSingularity(x)
    if params.c2 == 1.0:
        return 0.0
    root = math.sqrt((1.0 - x * x) * (1.0 - params.x0 * params.x0))
    ratio = (1.0 - params.x0 * x + root) / (x - params.x0)
    return -params.lambda_im * math.log(abs(ratio))


def boundary_phase(params: WeightParams, x: float) -> float:
    """Phase of lim D(x + i eps), eps -> 0+, for x in (-1, 1) minus x0."""
    return phase_phi_hat(params, x) + jump_phase(params, x)


def d_infinity(params: WeightParams) -> float:
    """
    D_inf = sqrt(c) D(inf, h) 2^{-(alpha+beta+gamma)/2} exp(-(log c/pi) arcsin x0).

    Strictly positive.
    """
    total_exponent = params.alpha + params.beta + params.gamma
    return (math.sqrt(params.c)
            * math.exp(_log_h_mean(params.h) / (2.0 * math.pi))
            * 2.0 ** (-0.5 * total_exponent)
            * math.exp(-params.lambda_im * math.asin(params.x0)))


def _on_cut(z: complex) -> bool:
    return z.imag == 0.0 and -1.0 <= z.real <= 1.0


def szego_eval(params: WeightParams, z: complex) -> SzegoEval:
    """
    Evaluate the three Szego factors and their product at z.

    Raises:
        ZOnCut: z lies on [-1, 1]
    """
    z = complex(z)
    if _on_cut(z):
        raise ZOnCut(z)
    if z.imag == 0.0:
        # normalize signed zero so all principal logs agree on the real axis
        z = complex(z.real, 0.0)

    s = np.sqrt(z - 1.0) * np.sqrt(z + 1.0)
    phi = z + s

    d_w1gamma = np.exp(
        0.5 * params.alpha * np.log(z - 1.0)
        + 0.5 * params.beta * np.log(z + 1.0)
        + 0.5 * params.gamma * np.log(z - params.x0)
        - 0.5 * (params.alpha + params.beta + params.gamma) * np.log(phi)
    )

    if params.c2 == 1.0:
        d_xi = 1.0 + 0.0j
    else:
        q = (1.0 - z * params.x0 - 1j * params.r0 * s) / (z - params.x0)
        d_xi = params.c * np.exp(-params.lam * np.log(q))

    d_h = _d_h(params.h, z, s)
    d_total = d_h * d_w1gamma * d_xi

    return SzegoEval(
        z=z,
        d_h=complex(d_h),
        d_w1gamma=complex(d_w1gamma),
        d_xi=complex(d_xi),
        d_total=complex(d_total),
    )


def _d_h(h: AnalyticFactor, z: complex, s: complex) -> complex:
    """
    exp( s/(2 pi) * integral log h(t) / (sqrt(1-t^2) (z - t)) dt ).

    log h(z) is subtracted from the integrand; the subtracted part
    integrates to pi/s in closed form.
    """
    if h.kind is FactorKind.ONE:
        return 1.0 + 0.0j

    rule = _chebyshev_rule(CHEBYSHEV_NODES)
    t = rule.nodes
    g_z = complex(h.log_value(complex(z)))
    smooth = (h.log_value(t) - g_z) / (z - t)
    cauchy = s / (2.0 * math.pi) * np.sum(rule.weights * smooth)
    return complex(np.exp(0.5 * g_z + cauchy))
