"""
Model Riemann-Hilbert solution near the interior point

Eight rays Gamma_1..Gamma_8 leave the origin at angles pi/2, 3pi/4, pi,
5pi/4, -pi/2, -pi/4, 0, pi/4 and split the plane into sectors 1..8
(sector 7 is (0, pi/4), sector 8 is (pi/4, pi/2), sector 1 is
(pi/2, 3pi/4), and so on counter-clockwise; sectors 5 and 6 sit in
(-pi/2, 0)). Psi has the constant jumps Psi_+ = Psi_- J_k across Gamma_k.

In every sector Psi = Psi_hat(zeta) K_s, where Psi_hat is built from the G/H
pair continued in the explicit argument of zeta over (-pi/2, 3pi/2) and
K_s is a product of jump matrices. Going once around the origin
multiplies Psi_hat by the monodromy matrix; the oriented product of the
eight jumps is its inverse.
"""

import math
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import mpmath
import numpy as np
import structlog
from mpmath import mp
from numpy.typing import NDArray

from genjacobi.errors import GammaPole, OnContour
from genjacobi.params import WeightParams

from .hypergeometric import WORKING_DPS, mp_g, mp_h, mp_power

logger = structlog.get_logger(__name__)

# Points closer to a ray than this (relative to |zeta|) are rejected
CONTOUR_TOLERANCE = 1e-8

QUARTER = math.pi / 4

# ray -> (angle, sector on the + side, sector on the - side)
RAYS: Dict[int, Tuple[float, int, int]] = {
    1: (2 * QUARTER, 1, 8),
    2: (3 * QUARTER, 2, 1),
    3: (4 * QUARTER, 3, 2),
    4: (5 * QUARTER, 3, 4),
    5: (6 * QUARTER, 4, 5),
    6: (-QUARTER, 5, 6),
    7: (0.0, 7, 6),
    8: (QUARTER, 8, 7),
}

# sector -> explicit-argument range
SECTORS: Dict[int, Tuple[float, float]] = {
    1: (2 * QUARTER, 3 * QUARTER),
    2: (3 * QUARTER, 4 * QUARTER),
    3: (4 * QUARTER, 5 * QUARTER),
    4: (5 * QUARTER, 6 * QUARTER),
    5: (-2 * QUARTER, -QUARTER),
    6: (-QUARTER, 0.0),
    7: (0.0, QUARTER),
    8: (QUARTER, 2 * QUARTER),
}

# floor(arg / (pi/4)) for arg in [0, 2pi) -> sector
_SECTOR_BY_OCTANT = (7, 8, 1, 2, 3, 4, 5, 6)

# multiple of pi/4 -> ray
_RAY_BY_OCTANT = (7, 8, 1, 2, 3, 4, 5, 6)


@dataclass(frozen=True)
class JumpMatrix:
    index: int
    entries: NDArray

    @property
    def det(self) -> complex:
        return complex(np.linalg.det(self.entries))


@dataclass(frozen=True)
class PsiValue:
    zeta: complex
    sector: int
    matrix: NDArray

    @property
    def det(self) -> complex:
        return complex(np.linalg.det(self.matrix))


def _to_numpy(matrix) -> NDArray:
    return np.array([[complex(matrix[i, j]) for j in range(2)] for i in range(2)])


def _mp_constants(params: WeightParams):
    """(gamma, lambda, c) as mp numbers from one source; call inside an mp context."""
    gamma = mpmath.mpf(params.gamma)
    c = mpmath.sqrt(mpmath.mpf(params.c2))
    lam = mpmath.mpc(0, mpmath.log(c) / mp.pi)
    return gamma, lam, c


def _mp_jumps(params: WeightParams) -> Dict[int, "mpmath.matrix"]:
    """J_1..J_8 as mp matrices; call inside an mp precision context."""
    g, _, c = _mp_constants(params)
    e_plus = mpmath.expjpi(g)       # e^{i gamma pi}
    e_minus = mpmath.expjpi(-g)
    half = mpmath.expjpi(g / 2)

    return {
        1: mpmath.matrix([[0, c], [-1 / c, 0]]),
        2: mpmath.matrix([[1, 0], [e_minus / c, 1]]),
        3: mpmath.matrix([[half, 0], [0, 1 / half]]),
        4: mpmath.matrix([[1, 0], [e_plus * c, 1]]),
        5: mpmath.matrix([[0, 1 / c], [-c, 0]]),
        6: mpmath.matrix([[1, 0], [e_minus * c, 1]]),
        7: mpmath.matrix([[half, 0], [0, 1 / half]]),
        8: mpmath.matrix([[1, 0], [e_plus / c, 1]]),
    }


def _mp_sector_products(jumps: Dict[int, "mpmath.matrix"]) -> Dict[int, "mpmath.matrix"]:
    """K_s with Psi = Psi_hat K_s in sector s."""
    inv = {k: mpmath.inverse(m) for k, m in jumps.items()}
    k8 = jumps[8]
    k1 = k8 * jumps[1]
    k2 = k1 * jumps[2]
    k3 = k2 * jumps[3]
    k4 = k3 * inv[4]
    return {
        1: k1,
        2: k2,
        3: k3,
        4: k4,
        5: inv[7] * jumps[6],
        6: inv[7],
        7: mpmath.eye(2),
        8: k8,
    }


def jump_matrices(params: WeightParams) -> List[JumpMatrix]:
    """The eight constant jump matrices; each has determinant 1 and J_3 = J_7."""
    with mp.workdps(WORKING_DPS):
        jumps = _mp_jumps(params)
        return [JumpMatrix(index=k, entries=_to_numpy(jumps[k])) for k in range(1, 9)]


def monodromy_matrix(params: WeightParams) -> NDArray:
    """
    Psi_hat(zeta e^{2 pi i}) = Psi_hat(zeta) @ monodromy:

        [[e^{i pi gamma}, -c + e^{-i pi gamma}/c],
         [0,              e^{-i pi gamma}       ]]
    """
    c = params.c
    e = complex(math.cos(math.pi * params.gamma), math.sin(math.pi * params.gamma))
    return np.array([[e, -c + e.conjugate() / c], [0.0, e.conjugate()]])


def cyclic_product(params: WeightParams) -> NDArray:
    """J8 J1 J2 J3 J4^{-1} J5^{-1} J6^{-1} J7, the jumps met on one loop around 0."""
    with mp.workdps(WORKING_DPS):
        jumps = _mp_jumps(params)
        inv = {k: mpmath.inverse(jumps[k]) for k in (4, 5, 6)}
        product = (jumps[8] * jumps[1] * jumps[2] * jumps[3]
                   * inv[4] * inv[5] * inv[6] * jumps[7])
        return _to_numpy(product)


def _mp_psi_hat(params: WeightParams, zeta: complex, arg):
    """Psi_hat as an mp matrix; call inside an mp precision context."""
    g, lam, _ = _mp_constants(params)
    half_gamma = g / 2
    a0 = lam + half_gamma

    g0, h0 = mp_g(a0, g, zeta, arg), mp_h(a0, g, zeta, arg)
    g1, h1 = mp_g(a0 + 1, g, zeta, arg), mp_h(a0 + 1, g, zeta, arg)

    gamma_b = mpmath.gamma(g + 1)
    upper = mpmath.gamma(1 - lam + half_gamma) / gamma_b
    lower = mpmath.gamma(1 + lam + half_gamma)

    phase = mpmath.expjpi(half_gamma / 2)  # e^{i gamma pi / 4}
    return mpmath.matrix([
        [upper * g0 * phase, -h0 / phase],
        [lower / gamma_b * g1 * phase, lower * mpmath.rgamma(half_gamma - lam) * h1 / phase],
    ])


def psi_hat(params: WeightParams, zeta: complex, arg: Optional[float] = None) -> NDArray:
    """
    The unnormalized solution Psi_hat at zeta on the sheet of `arg`.

    Entries use the G/H pair with a = lambda + gamma/2 and a + 1, the
    Gamma-function prefactors that make det = 1, and the postfactor
    e^{i gamma pi sigma3 / 4}.
    """
    if arg is None:
        arg = math.atan2(zeta.imag, zeta.real)
    with mp.workdps(WORKING_DPS):
        return _to_numpy(_mp_psi_hat(params, complex(zeta), arg))


def sector_of(zeta: complex) -> Tuple[int, float]:
    """
    (sector, explicit argument) of a point off the rays.

    Raises:
        OnContour: zeta is 0 or within CONTOUR_TOLERANCE*|zeta| of a ray
    """
    zeta = complex(zeta)
    radius = abs(zeta)
    if radius == 0.0:
        raise OnContour(zeta, None)

    turn = math.atan2(zeta.imag, zeta.real) % (2 * math.pi)
    nearest = round(turn / QUARTER)
    offset = turn - nearest * QUARTER
    if abs(math.sin(offset)) < CONTOUR_TOLERANCE:
        raise OnContour(zeta, _RAY_BY_OCTANT[nearest % 8])

    octant = int(turn // QUARTER) % 8
    sector = _SECTOR_BY_OCTANT[octant]
    arg = turn if octant < 6 else turn - 2 * math.pi
    return sector, arg


def _mp_psi(params: WeightParams, zeta: complex, sector: int, arg):
    """
    Psi in `sector` from its closed form; call inside an mp precision context.

    H(., gamma; zeta e^{k pi i}) is evaluated at the point (-1)^k zeta with
    explicit argument arg + k pi, so every H stays on its principal sheet.
    """
    g, lam, c = _mp_constants(params)
    half = g / 2
    a0 = lam + half
    theta = mpmath.mpf(arg)

    def h(a, k):
        point = zeta if k % 2 == 0 else -zeta
        return mp_h(a, g, point, theta + k * mp.pi)

    def first_column():
        norm = mpmath.rgamma(g + 1)
        return (mpmath.gamma(1 - lam + half) * norm * mp_g(a0, g, zeta, theta),
                mpmath.gamma(1 + lam + half) * norm * mp_g(a0 + 1, g, zeta, theta))

    # Gamma(1 - lam + gamma/2)/Gamma(gamma/2 + lam), Gamma(1 + lam + gamma/2)/Gamma(gamma/2 - lam)
    k_up = mpmath.gamma(1 - lam + half) * mpmath.rgamma(a0)
    k_lo = mpmath.gamma(1 + lam + half) * mpmath.rgamma(half - lam)
    tilt = mpmath.expjpi(-half)  # e^{-i gamma pi/2}

    if sector == 1:
        rows = [[h(a0, 0) / c, -k_up * h(1 - lam + half, -1)],
                [-k_lo * h(a0 + 1, 0) / c, h(half - lam, -1)]]
    elif sector == 2:
        top, bottom = first_column()
        rows = [[top * tilt, -k_up * h(1 - lam + half, -1)],
                [bottom * tilt, h(half - lam, -1)]]
    elif sector == 3:
        top, bottom = first_column()
        rows = [[top, -k_up * h(1 - lam + half, -1) * tilt],
                [bottom, h(half - lam, -1) * tilt]]
    elif sector == 4:
        rows = [[c * h(a0, -2), -k_up * h(1 - lam + half, -1)],
                [-c * k_lo * h(a0 + 1, -2), h(half - lam, -1)]]
    elif sector == 5:
        turn = mpmath.exp(-1j * mp.pi * lam)  # e^{-lambda pi i}
        rows = [[-k_up * h(1 - lam + half, 1) * turn, -h(a0, 0)],
                [h(half - lam, 1) * turn, k_lo * h(a0 + 1, 0)]]
    elif sector in (6, 7):
        top, bottom = first_column()
        rows = [[top, -h(a0, 0)],
                [bottom, k_lo * h(a0 + 1, 0)]]
    elif sector == 8:
        rows = [[-k_up * h(1 - lam + half, -1) / c, -h(a0, 0)],
                [h(half - lam, -1) / c, k_lo * h(a0 + 1, 0)]]
    else:
        raise ValueError(f"no sector {sector}")

    q = mpmath.expjpi(half / 2)  # e^{i gamma pi/4}
    post = q if sector in (4, 7, 8) else 1 / q
    return mpmath.matrix(rows) * mpmath.diag([post, 1 / post])


def _mp_psi_from_hat(params: WeightParams, zeta: complex, sector: int, arg):
    products = _mp_sector_products(_mp_jumps(params))
    return _mp_psi_hat(params, zeta, arg) * products[sector]


def psi_eval(params: WeightParams, zeta: complex) -> PsiValue:
    """
    Psi at zeta off the rays.

    Raises:
        OnContour: zeta lies on a ray or at the origin
    """
    sector, arg = sector_of(zeta)
    with mp.workdps(WORKING_DPS):
        matrix = _to_numpy(_mp_psi(params, complex(zeta), sector, arg))
    return PsiValue(zeta=complex(zeta), sector=sector, matrix=matrix)


def sector_formula_residual(params: WeightParams, zeta: complex) -> float:
    """
    Relative || Psi - Psi_hat K_s || at zeta, comparing the closed sector
    formula with Psi_hat continued in the explicit argument times the
    jump-matrix product of the sector.
    """
    sector, arg = sector_of(zeta)
    with mp.workdps(WORKING_DPS):
        closed = _mp_psi(params, complex(zeta), sector, arg)
        continued = _mp_psi_from_hat(params, complex(zeta), sector, arg)
        scale = max(mpmath.mpf(1), mpmath.mnorm(continued, 'f'))
        return float(mpmath.mnorm(closed - continued, 'f') / scale)


def _sheet_angle(sector: int, angle: float) -> float:
    """The copy of `angle` (mod 2pi) inside the closed range of `sector`."""
    lo, hi = SECTORS[sector]
    for candidate in (angle, angle - 2 * math.pi, angle + 2 * math.pi):
        if lo - 1e-12 <= candidate <= hi + 1e-12:
            return candidate
    raise ValueError(f"angle {angle} does not bound sector {sector}")


def _mp_boundary(params: WeightParams, ray: int, radius: float, side: str, offset: float):
    angle, plus_sector, minus_sector = RAYS[ray]
    sector = plus_sector if side == "+" else minus_sector
    arg = _sheet_angle(sector, angle)
    if offset:
        lo, _ = SECTORS[sector]
        arg += offset if abs(arg - lo) < 1e-12 else -offset
    zeta = complex(radius * math.cos(arg), radius * math.sin(arg))
    return _mp_psi(params, zeta, sector, arg)


def psi_boundary(
    params: WeightParams,
    ray: int,
    radius: float,
    side: str,
    offset: float = 0.0,
) -> NDArray:
    """
    Boundary value of Psi on ray `ray` at distance `radius` from the origin.

    With offset = 0 the sector formula of the chosen side is continued up
    to the ray (exact one-sided limit). A positive offset evaluates at the
    angle moved by `offset` radians into that side's sector instead.
    """
    with mp.workdps(WORKING_DPS):
        return _to_numpy(_mp_boundary(params, ray, radius, side, offset))


def jump_residual(params: WeightParams, ray: int, radius: float, offset: float = 0.0) -> float:
    """
    || Psi_+ - Psi_- J_ray || (Frobenius) at one point of a ray.

    With a positive offset the two sides are sampled at +-offset and
    +-2 offset radians off the ray and the defect is extrapolated
    linearly to the ray, D(0) ~ 2 D(offset) - D(2 offset).
    """
    with mp.workdps(WORKING_DPS):
        jump = _mp_jumps(params)[ray]

        def defect(delta):
            plus = _mp_boundary(params, ray, radius, "+", delta)
            minus = _mp_boundary(params, ray, radius, "-", delta)
            return plus - minus * jump

        if offset:
            residual = 2 * defect(offset) - defect(2 * offset)
        else:
            residual = defect(0.0)
        return float(mpmath.mnorm(residual, 'f'))


def monodromy_residual(params: WeightParams, zeta: complex) -> float:
    """
    Relative || Psi_hat(arg + 2pi) - Psi_hat(arg) M || for zeta with
    arg in (-pi/2, pi/2).
    """
    arg = math.atan2(zeta.imag, zeta.real)
    turned = psi_hat(params, zeta, arg + 2 * math.pi)
    expected = psi_hat(params, zeta, arg) @ monodromy_matrix(params)
    return float(np.linalg.norm(turned - expected, 2) / max(1.0, np.linalg.norm(expected, 2)))


def expansion_coeffs(params: WeightParams, k_max: int) -> Tuple[List[complex], complex]:
    """
    upsilon_k = (lambda + gamma/2)_k (lambda - gamma/2)_k / k!, k = 1..k_max,
    and tau = -Gamma(gamma/2 - lambda) / Gamma(gamma/2 + lambda + 1).

    Raises:
        GammaPole: gamma/2 - lambda is a nonpositive integer
    """
    with mp.workdps(WORKING_DPS):
        gamma, lam, _ = _mp_constants(params)
        ups, tau = _mp_expansion_coeffs(gamma, lam, k_max)
        return [complex(u) for u in ups], complex(tau)


def _mp_expansion_coeffs(gamma, lam, k_max: int):
    half_gamma = gamma / 2
    pole = half_gamma - lam
    if pole.imag == 0 and pole.real <= 0 and mpmath.isint(pole.real):
        raise GammaPole(complex(pole))
    ups = [mpmath.rf(lam + half_gamma, k) * mpmath.rf(lam - half_gamma, k) / mpmath.factorial(k)
           for k in range(1, k_max + 1)]
    tau = -mpmath.gamma(pole) * mpmath.rgamma(half_gamma + lam + 1)
    return ups, tau


def _normalizer(params: WeightParams, arg: float):
    """M(zeta) in Psi M e^{zeta sigma3/2} zeta^{lambda sigma3} -> I, by quadrant of arg."""
    gamma, lam, _ = _mp_constants(params)
    q = mpmath.expjpi(gamma / 4)                          # e^{i gamma pi/4}
    rot = mpmath.matrix([[0, 1], [-1, 0]])
    turn = mpmath.exp(-1j * mp.pi * lam)                  # e^{-lambda pi i}
    if math.pi / 2 < arg < math.pi:
        return mpmath.diag([q * turn, 1 / (q * turn)])
    if math.pi < arg < 3 * math.pi / 2:
        return mpmath.diag([turn / q, q / turn])
    if -math.pi / 2 < arg < 0:
        return mpmath.diag([q, 1 / q]) * rot
    if 0 < arg < math.pi / 2:
        return mpmath.diag([1 / q, q]) * rot
    raise OnContour(complex(math.cos(arg), math.sin(arg)), None)


def expansion_error(params: WeightParams, zeta: complex, terms: int) -> float:
    """
    || Psi(zeta) M(zeta) e^{zeta sigma3/2} zeta^{lambda sigma3}
       - (I + sum_{n<terms} T_n zeta^{-n}) ||

    with T_n = [[(-1)^n u_n,      n tau u~_n],
                [(-1)^n n tau~ u_n, u~_n     ]],
    u_n = upsilon_n(lambda), u~_n = upsilon_n(-lambda), tau~ = tau(-lambda).
    The error is O(|zeta|^{-terms}).
    """
    if terms < 1:
        raise ValueError(f"terms must be >= 1, got {terms}")
    sector, arg = sector_of(zeta)

    with mp.workdps(WORKING_DPS):
        zz = mpmath.mpc(zeta)
        psi = _mp_psi(params, complex(zeta), sector, arg)
        gamma, lam, _ = _mp_constants(params)
        z_lam = mp_power(complex(zeta), lam, arg)
        scale = mpmath.diag([mpmath.exp(zz / 2) * z_lam, mpmath.exp(-zz / 2) / z_lam])
        normalized = psi * _normalizer(params, arg) * scale

        series = mpmath.eye(2)
        if terms > 1:
            ups, tau = _mp_expansion_coeffs(gamma, lam, terms - 1)
            ups_bar, tau_bar = _mp_expansion_coeffs(gamma, -lam, terms - 1)
            for n in range(1, terms):
                u, ub = ups[n - 1], ups_bar[n - 1]
                sign = (-1) ** n
                t_n = mpmath.matrix([[sign * u, n * tau * ub], [sign * n * tau_bar * u, ub]])
                series += t_n * zz ** (-n)

        diff = normalized - series
        return float(mpmath.mnorm(diff, 'f'))


def det_grid(
    params: WeightParams,
    radii: Sequence[float] = (0.3, 2.0, 10.0),
) -> List[Tuple[complex, float]]:
    """(zeta, |det Psi - 1|) at the midpoint of each sector for every radius."""
    results = []
    for radius in radii:
        for lo, hi in SECTORS.values():
            mid = 0.5 * (lo + hi)
            zeta = complex(radius * math.cos(mid), radius * math.sin(mid))
            value = psi_eval(params, zeta)
            results.append((zeta, abs(value.det - 1.0)))
    return results
