"""Complex log-gamma helpers shared by the Szego and asymptotics layers."""

import math

import numpy as np
from scipy.special import loggamma


def log_gamma(z: complex) -> complex:
    """Principal-branch log Gamma(z) for complex z (cut along the negative real axis)."""
    return complex(loggamma(complex(z)))


def arg_gamma(z: complex) -> float:
    """arg Gamma(z), principal determination in (-pi, pi]."""
    phase = log_gamma(z).imag
    wrapped = math.remainder(phase, 2.0 * math.pi)
    if wrapped == -math.pi:
        return math.pi
    return wrapped


def principal_arg(z: complex) -> float:
    """arg z in (-pi, pi]."""
    return float(np.angle(complex(z)))
