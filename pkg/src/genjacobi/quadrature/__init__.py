"""Gauss-Jacobi and composite quadrature rules."""

from .tridiagonal import SymTridiag, tridiag_eigen
from .rules import (
    QuadratureRule,
    composite_rule,
    gauss_chebyshev,
    gauss_jacobi,
    jacobi_mass,
    jacobi_recurrence,
    required_nodes_per_piece,
)

__all__ = [
    "SymTridiag",
    "tridiag_eigen",
    "QuadratureRule",
    "composite_rule",
    "gauss_chebyshev",
    "gauss_jacobi",
    "jacobi_mass",
    "jacobi_recurrence",
    "required_nodes_per_piece",
]
