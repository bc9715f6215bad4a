"""Confluent hypergeometric functions and the local parametrix Psi."""

from .hypergeometric import (
    WORKING_DPS,
    CfhParams,
    confluent_residual,
    g_h_pair,
    kummer_m,
    tricomi_u,
    whittaker_link,
)
from .psi import (
    RAYS,
    SECTORS,
    JumpMatrix,
    PsiValue,
    cyclic_product,
    det_grid,
    expansion_coeffs,
    expansion_error,
    jump_matrices,
    jump_residual,
    monodromy_matrix,
    monodromy_residual,
    psi_boundary,
    psi_eval,
    psi_hat,
    sector_formula_residual,
    sector_of,
)
from .verification import (
    ParametrixCheck,
    ParametrixReport,
    expansion_slope,
    run_parametrix_suite,
)

__all__ = [
    "WORKING_DPS",
    "CfhParams",
    "confluent_residual",
    "g_h_pair",
    "kummer_m",
    "tricomi_u",
    "whittaker_link",
    "RAYS",
    "SECTORS",
    "JumpMatrix",
    "PsiValue",
    "cyclic_product",
    "det_grid",
    "expansion_coeffs",
    "expansion_error",
    "jump_matrices",
    "jump_residual",
    "monodromy_matrix",
    "monodromy_residual",
    "psi_boundary",
    "psi_eval",
    "psi_hat",
    "sector_formula_residual",
    "sector_of",
    "ParametrixCheck",
    "ParametrixReport",
    "expansion_slope",
    "run_parametrix_suite",
]
