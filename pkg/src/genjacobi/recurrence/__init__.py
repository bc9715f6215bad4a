"""Recurrence coefficients by the discretized Stieltjes procedure."""

from .stieltjes import RecurrenceTable, eval_monic, format_float, stieltjes

__all__ = ["RecurrenceTable", "eval_monic", "format_float", "stieltjes"]
