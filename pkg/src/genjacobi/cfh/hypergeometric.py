"""
Confluent hypergeometric functions with complex parameters

Thin layer over mpmath: Kummer M (`hyp1f1`), Tricomi U (`hyperu`) and
Whittaker M (`whitm`) are evaluated at WORKING_DPS digits and returned as
Python complex. Tricomi U and the power z^{gamma/2} take an explicit
argument of z so that values can be continued past the negative real axis,
up to one turn beyond the principal sheet. The default branch is
-pi/2 < arg z <= 3pi/2.
"""

import math
from dataclasses import dataclass
from typing import Optional, Tuple

import mpmath
import structlog
from mpmath import mp

from genjacobi.errors import GammaPole, SeriesOverflow, ZeroArgument
from genjacobi.params import WeightParams

logger = structlog.get_logger(__name__)

# Decimal digits for every mpmath evaluation
WORKING_DPS = 40


@dataclass(frozen=True)
class CfhParams:
    """
    Parameters of the G/H pair.

    a = lambda + gamma/2 (plus an integer shift), b = gamma + 1.
    """

    a: complex
    gamma: float
    lam: complex

    @property
    def b(self) -> float:
        return self.gamma + 1.0

    @classmethod
    def from_weight(cls, params: WeightParams, shift: int = 0) -> "CfhParams":
        lam = params.lam
        return cls(a=lam + 0.5 * params.gamma + shift, gamma=params.gamma, lam=lam)

    def shifted(self, k: int) -> "CfhParams":
        return CfhParams(a=self.a + k, gamma=self.gamma, lam=self.lam)


def to_complex(value, z: complex = 0j) -> complex:
    """
    Convert an mpmath number to complex.

    Raises:
        SeriesOverflow: the value does not fit in binary64
    """
    result = complex(value)
    if not (math.isfinite(result.real) and math.isfinite(result.imag)):
        raise SeriesOverflow(z, "(result not representable)")
    return result


def mp_point(z: complex, arg: Optional[float] = None):
    """
    (z as mpc, explicit argument) inside the current mp context.

    The modulus always comes from z; `arg` only selects the sheet. Without
    `arg` the argument is taken in (-pi/2, 3pi/2], the branch on which the
    G/H pair is defined.
    """
    zz = mpmath.mpc(z)
    if arg is None:
        arg = mpmath.arg(zz)
        if arg <= -mp.pi / 2:
            arg += 2 * mp.pi
    return zz, mpmath.mpf(arg)


def mp_power(z: complex, exponent, arg: Optional[float] = None):
    """z^exponent on the sheet selected by `arg`, inside the current mp context."""
    zz, theta = mp_point(z, arg)
    return mpmath.exp(exponent * (mpmath.log(abs(zz)) + 1j * theta))


def _check_b(b: float) -> None:
    if b <= 0 and float(b).is_integer():
        raise GammaPole(b)


def mp_kummer_m(a, b, z):
    """Kummer M(a, b, z); entire in z."""
    return mpmath.hyp1f1(a, b, z)


def mp_tricomi_u(a, b, z: complex, arg: Optional[float] = None):
    """
    Tricomi U(a, b, z) on the sheet of `arg`, inside the current mp context.

    For arg in (pi, 3pi) the continuation formula across the cut is used:

        U(a, b, z e^{2 pi i}) = e^{-2 pi i b} U(a, b, z)
            + 2 pi i e^{-pi i b} M(a, b, z) / (Gamma(1+a-b) Gamma(b))
    """
    if z == 0:
        raise ZeroArgument()
    zz, theta = mp_point(z, arg)
    principal = mpmath.arg(zz)
    turns = int(round(float((theta - principal) / (2 * mp.pi))))

    if turns == 0:
        return mpmath.hyperu(a, b, zz)
    if turns == 1:
        base = mpmath.hyperu(a, b, zz)
        kummer = mpmath.hyp1f1(a, b, zz) * mpmath.rgamma(1 + a - b) * mpmath.rgamma(b)
        return (mpmath.expjpi(-2 * b) * base
                + 2j * mp.pi * mpmath.expjpi(-b) * kummer)
    raise ValueError(f"argument {float(theta)} is more than one turn from the principal sheet")


def kummer_m(a: complex, b: float, z: complex) -> complex:
    """
    Kummer's function M(a, b, z) = 1F1(a; b; z).

    Raises:
        GammaPole: b is a nonpositive integer
        SeriesOverflow: the value is not representable in binary64
    """
    _check_b(b)
    with mp.workdps(WORKING_DPS):
        return to_complex(mp_kummer_m(a, b, z), z)


def tricomi_u(a: complex, b: float, z: complex, arg: Optional[float] = None) -> complex:
    """
    Tricomi's function U(a, b, z).

    Args:
        a, b: Parameters (integer b is handled natively)
        z: Argument, nonzero
        arg: Explicit argument of z in (-pi, 3pi); taken in (-pi/2, 3pi/2]
            if omitted

    Raises:
        ZeroArgument: z == 0
        SeriesOverflow: the value is not representable in binary64
    """
    with mp.workdps(WORKING_DPS):
        return to_complex(mp_tricomi_u(a, b, z, arg), z)


def _mp_prefactor(gamma, z: complex, arg):
    return mp_power(z, gamma / 2, arg) * mpmath.exp(-mpmath.mpc(z) / 2)


def mp_g(a, gamma, z: complex, arg=None):
    """G(a, gamma; z) from mp parameters, inside the current mp context."""
    if z == 0:
        raise ZeroArgument()
    return _mp_prefactor(gamma, z, arg) * mp_kummer_m(a, gamma + 1, z)


def mp_h(a, gamma, z: complex, arg=None):
    """H(a, gamma; z) from mp parameters, inside the current mp context."""
    if z == 0:
        raise ZeroArgument()
    return _mp_prefactor(gamma, z, arg) * mp_tricomi_u(a, gamma + 1, z, arg)


def mp_g_h_pair(p: CfhParams, z: complex, arg: Optional[float] = None):
    """G and H as mp numbers inside the current mp context."""
    a, gamma = mpmath.mpc(p.a), mpmath.mpf(p.gamma)
    return mp_g(a, gamma, z, arg), mp_h(a, gamma, z, arg)


def g_h_pair(p: CfhParams, z: complex, arg: Optional[float] = None) -> Tuple[complex, complex]:
    """
    Solutions of the confluent equation in the form

        G(a, gamma; z) = z^{gamma/2} M(a, gamma+1, z) e^{-z/2}
        H(a, gamma; z) = z^{gamma/2} U(a, gamma+1, z) e^{-z/2}

    with z^{gamma/2} taken on the sheet of `arg`, by default the one with
    -pi/2 < arg z <= 3pi/2.
    """
    with mp.workdps(WORKING_DPS):
        g, h = mp_g_h_pair(p, z, arg)
        return to_complex(g, z), to_complex(h, z)


def whittaker_link(p: CfhParams, z: complex) -> complex:
    """
    M_{kappa,mu}(z) / sqrt(z) with mu = gamma/2, kappa = 1/2 + mu - a.

    Equals G(a, gamma; z) for -pi/2 < arg z <= pi.
    """
    with mp.workdps(WORKING_DPS):
        mu = mpmath.mpf(p.gamma) / 2
        kappa = 0.5 + mu - mpmath.mpc(p.a)
        value = mpmath.whitm(kappa, mu, z) / mpmath.sqrt(mpmath.mpc(z))
        return to_complex(value, z)


def confluent_residual(p: CfhParams, z: complex, which: str = "G") -> float:
    """
    |4z^2 w'' + 4z w' + (-gamma^2 + 2z(gamma+1-2a) - z^2) w| for w = G or H.

    Derivatives are central differences taken by mpmath at working precision.
    """
    index = {"G": 0, "H": 1}[which]

    with mp.workdps(WORKING_DPS):
        def w(point):
            return mp_g_h_pair(p, point)[index]

        zz = mpmath.mpc(z)
        first = mpmath.diff(w, zz, 1)
        second = mpmath.diff(w, zz, 2)
        gamma = mpmath.mpf(p.gamma)
        coeff = -gamma ** 2 + 2 * zz * (gamma + 1 - 2 * mpmath.mpc(p.a)) - zz ** 2
        return float(abs(4 * zz ** 2 * second + 4 * zz * first + coeff * w(zz)))
