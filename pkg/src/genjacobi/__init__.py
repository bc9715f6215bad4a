"""
genjacobi - recurrence coefficients of generalized Jacobi weights

Computes the recurrence coefficients of weights with Jacobi endpoint
factors, an interior algebraic singularity and a jump, compares them with
the oscillatory 1/n asymptotic law, and verifies the confluent
hypergeometric local parametrix behind that law.
"""

__version__ = "0.1.0"
