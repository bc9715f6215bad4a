"""Oscillatory 1/n predictions, residue matrices and residual analysis."""

from .predictions import (
    AsymptoticPrediction,
    ResidueSet,
    SignConvention,
    amplitude,
    big_theta,
    eta_n,
    first_order_reconstruction,
    predict,
    residues,
    theta_n,
    varsigma,
)
from .residuals import ResidualReport, envelope_slope, residual_report

__all__ = [
    "AsymptoticPrediction",
    "ResidueSet",
    "SignConvention",
    "amplitude",
    "big_theta",
    "eta_n",
    "first_order_reconstruction",
    "predict",
    "residues",
    "theta_n",
    "varsigma",
    "ResidualReport",
    "envelope_slope",
    "residual_report",
]
