"""
Exception hierarchy for genjacobi.

Every error carries its diagnostic payload as attributes and composes a
readable message at construction time.
"""

from typing import Any, Optional


class GenJacobiError(Exception):
    """Base class for all genjacobi errors."""


# --- params -----------------------------------------------------------------

class ParameterError(GenJacobiError):
    """Invalid weight parameters."""


class ExponentOutOfRange(ParameterError):
    """Raised when alpha, beta or gamma is not > -1."""

    def __init__(self, name: str, value: float):
        self.name = name
        self.value = value
        super().__init__(
            f"Exponent {name}={value} out of range: integrability requires {name} > -1"
        )


class X0OutOfRange(ParameterError):
    """Raised when the interior point is not strictly inside (-1, 1)."""

    def __init__(self, x0: float):
        self.x0 = x0
        super().__init__(f"Interior point x0={x0} must satisfy -1 < x0 < 1")


class JumpNonPositive(ParameterError):
    """Raised when the jump height c2 is not positive."""

    def __init__(self, c2: float):
        self.c2 = c2
        super().__init__(f"Jump height c2={c2} must be positive")


class FactorNotPositive(ParameterError):
    """Raised when the analytic factor h fails the positivity check."""

    def __init__(self, x: float, value: float):
        self.x = x
        self.value = value
        super().__init__(
            f"Analytic factor is not strictly positive on [-1, 1]: h({x:.6g}) = {value:.6g}"
        )


class EvalAtNonintegrableSingularity(ParameterError):
    """Raised when the weight is evaluated at a singular point with negative exponent."""

    def __init__(self, x: float, exponent_name: str, exponent: float):
        self.x = x
        self.exponent_name = exponent_name
        self.exponent = exponent
        super().__init__(
            f"Weight is singular at x={x} ({exponent_name}={exponent} < 0)"
        )


# --- quadrature -------------------------------------------------------------

class QuadratureError(GenJacobiError):
    """Quadrature rule construction failed."""


class NoConvergence(QuadratureError):
    """Raised when the tridiagonal eigensolver fails to converge."""

    def __init__(self, size: int, detail: str = ""):
        self.size = size
        self.detail = detail
        message = f"Tridiagonal eigensolver did not converge (m={size})"
        if detail:
            message += f": {detail}"
        super().__init__(message)


# --- recurrence -------------------------------------------------------------

class RecurrenceError(GenJacobiError):
    """Recurrence coefficient computation failed."""


class DegreeTooHighForRule(RecurrenceError):
    """Raised when a quadrature rule is too coarse for the requested degree."""

    def __init__(self, n_max: int, exact_degree: int, required_degree: int):
        self.n_max = n_max
        self.exact_degree = exact_degree
        self.required_degree = required_degree
        super().__init__(
            f"n_max={n_max} needs a rule exact through degree {required_degree}, "
            f"supplied rule is exact through {exact_degree}"
        )


class IndexOutOfRange(RecurrenceError):
    """Raised when a polynomial degree outside the table is requested."""

    def __init__(self, n: int, n_max: int):
        self.n = n
        self.n_max = n_max
        super().__init__(f"Degree n={n} outside table range 0..{n_max}")


class CoefficientOutOfBounds(RecurrenceError):
    """Raised when a computed b_n leaves the support (-1, 1)."""

    def __init__(self, index: int, value: float):
        self.index = index
        self.value = value
        super().__init__(
            f"Recurrence coefficient b[{index}]={value!r} outside (-1, 1); "
            f"quadrature discretization is inconsistent"
        )


# --- szego ------------------------------------------------------------------

class SzegoError(GenJacobiError):
    """Szego function evaluation failed."""


class XAtSingularity(SzegoError):
    """Raised when a boundary phase is requested at the interior point x0."""

    def __init__(self, x: float):
        self.x = x
        super().__init__(f"Boundary phase undefined at the singular point x={x}")


class ZOnCut(SzegoError):
    """Raised when the Szego function is evaluated on [-1, 1]."""

    def __init__(self, z: complex):
        self.z = z
        super().__init__(f"z={z} lies on the cut [-1, 1]")


# --- asymptotics ------------------------------------------------------------

class AsymptoticsError(GenJacobiError):
    """Asymptotic prediction failed."""


class DegenerateNoSingularity(AsymptoticsError):
    """Raised when gamma = 0 and c2 = 1, so no oscillatory correction exists."""

    def __init__(self, quantity: str = "Theta"):
        self.quantity = quantity
        super().__init__(
            f"{quantity} is undefined for gamma=0 and c2=1 (no interior singularity)"
        )


class NegativeA2(AsymptoticsError):
    """Raised when the first-order a_n^2 reconstruction is not positive."""

    def __init__(self, n: int, value: float):
        self.n = n
        self.value = value
        super().__init__(f"First-order a_n^2 at n={n} is {value!r} <= 0")


class NonRealReconstruction(AsymptoticsError):
    """Raised when a first-order coefficient keeps an imaginary part."""

    def __init__(self, n: int, name: str, imag: float):
        self.n = n
        self.name = name
        self.imag = imag
        super().__init__(f"{name} reconstruction has imaginary part {imag!r} at n={n}")


class WindowTooSmall(AsymptoticsError):
    """Raised when residual statistics lack data."""

    def __init__(self, window: Any, reason: str):
        self.window = window
        self.reason = reason
        super().__init__(f"Residual window {window} too small: {reason}")


# --- cfh --------------------------------------------------------------------

class CfhError(GenJacobiError):
    """Confluent hypergeometric / parametrix evaluation failed."""


class SeriesOverflow(CfhError):
    """Raised when a hypergeometric value is not representable in binary64."""

    def __init__(self, z: complex, detail: str = ""):
        self.z = z
        self.detail = detail
        super().__init__(f"Hypergeometric value at z={z} overflows binary64 {detail}".rstrip())


class ZeroArgument(CfhError):
    """Raised when the Tricomi function is evaluated at z = 0."""

    def __init__(self):
        super().__init__("Tricomi U is singular at z=0")


class GammaPole(CfhError):
    """Raised when a Gamma ratio hits a pole."""

    def __init__(self, argument: complex):
        self.argument = argument
        super().__init__(f"Gamma function pole at {argument}")


class OnContour(CfhError):
    """Raised when Psi is requested on one of the eight jump rays."""

    def __init__(self, zeta: complex, ray: Optional[int]):
        self.zeta = zeta
        self.ray = ray
        where = f"ray {ray}" if ray is not None else "the origin"
        super().__init__(f"zeta={zeta} lies on {where}; use boundary values instead")


# --- config / run -----------------------------------------------------------

class ConfigError(GenJacobiError):
    """Experiment configuration problem."""


class ParseError(ConfigError):
    """Raised for malformed or unknown configuration entries."""

    def __init__(self, message: str, line: Optional[int] = None, key: Optional[str] = None):
        self.line = line
        self.key = key
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(f"{prefix}{message}")


class ValidationError(ConfigError):
    """Raised when configured values fail validation."""

    def __init__(self, cause: Exception):
        self.cause = cause
        super().__init__(f"Invalid configuration: {cause}")


class RunError(GenJacobiError):
    """Experiment run failure."""


class IoError(RunError):
    """Raised when outputs cannot be written."""

    def __init__(self, path: Any, reason: str):
        self.path = path
        self.reason = reason
        super().__init__(f"Cannot write to {path}: {reason}")


class StageError(RunError):
    """Wraps a module error with the name of the stage that raised it."""

    def __init__(self, stage: str, cause: Exception):
        self.stage = stage
        self.cause = cause
        super().__init__(f"Stage '{stage}' failed: {cause}")
