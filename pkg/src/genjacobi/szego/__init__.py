"""Szego function factors, boundary phases and the principal-value integral."""

from .functions import (
    CHEBYSHEV_NODES,
    SzegoEval,
    boundary_phase,
    d_infinity,
    jump_phase,
    phase_phi,
    phase_phi_hat,
    pv_log_h,
    szego_eval,
)
from .special import arg_gamma, log_gamma, principal_arg

__all__ = [
    "CHEBYSHEV_NODES",
    "SzegoEval",
    "boundary_phase",
    "d_infinity",
    "jump_phase",
    "phase_phi",
    "phase_phi_hat",
    "pv_log_h",
    "szego_eval",
    "arg_gamma",
    "log_gamma",
    "principal_arg",
]
