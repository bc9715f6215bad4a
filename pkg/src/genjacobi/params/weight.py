"""
Generalized Jacobi weight parameters

Holds the parameter set of the weight

    w(x) = (1-x)^alpha (1+x)^beta |x0-x|^gamma h(x) Xi(x),   x in [-1, 1]

where Xi equals 1 on [-1, x0) and c2 on [x0, 1], together with validation
and pointwise evaluation.
"""

import math
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Any, Dict, Optional, Sequence, Tuple, Union

import numpy as np
import structlog
from numpy.typing import ArrayLike, NDArray

from genjacobi.errors import (
    EvalAtNonintegrableSingularity,
    ExponentOutOfRange,
    FactorNotPositive,
    JumpNonPositive,
    X0OutOfRange,
)

logger = structlog.get_logger(__name__)

# Uniform grid size for the positivity check of h
POSITIVITY_GRID_POINTS = 1001


class FactorKind(Enum):
    """Supported families for the analytic factor h."""
    ONE = "one"                  # h(x) = 1
    EXP_LINEAR = "exp_linear"    # h(x) = exp(s x)
    POLYNOMIAL = "polynomial"    # h(x) = sum c_k x^k


@dataclass(frozen=True)
class AnalyticFactor:
    """
    Real-analytic factor h of the weight.

    `param` is None for ONE, the slope s for EXP_LINEAR and the tuple of
    ascending coefficients for POLYNOMIAL. All evaluators accept real or
    complex scalars and arrays.
    """

    kind: FactorKind = FactorKind.ONE
    param: Union[None, float, Tuple[float, ...]] = None

    @classmethod
    def one(cls) -> "AnalyticFactor":
        return cls(FactorKind.ONE, None)

    @classmethod
    def exp_linear(cls, s: float) -> "AnalyticFactor":
        return cls(FactorKind.EXP_LINEAR, float(s))

    @classmethod
    def polynomial(cls, coeffs: Sequence[float]) -> "AnalyticFactor":
        coeffs = tuple(float(c) for c in coeffs)
        if not coeffs:
            raise ValueError("Polynomial factor needs at least one coefficient")
        return cls(FactorKind.POLYNOMIAL, coeffs)

    def value(self, x: ArrayLike) -> Any:
        """Evaluate h(x)."""
        x = np.asarray(x)
        if self.kind is FactorKind.ONE:
            return np.ones_like(x, dtype=np.result_type(x, float))
        if self.kind is FactorKind.EXP_LINEAR:
            return np.exp(self.param * x)
        return np.polynomial.polynomial.polyval(x, self.param)

    def log_value(self, x: ArrayLike) -> Any:
        """Evaluate log h(x); principal logarithm for complex arguments."""
        x = np.asarray(x)
        if self.kind is FactorKind.ONE:
            return np.zeros_like(x, dtype=np.result_type(x, float))
        if self.kind is FactorKind.EXP_LINEAR:
            return self.param * x
        values = np.polynomial.polynomial.polyval(x, self.param)
        if np.iscomplexobj(values):
            return np.log(values)
        return np.log(values.astype(float))

    def log_derivative(self, x: ArrayLike) -> Any:
        """Evaluate (log h)'(x) = h'(x)/h(x)."""
        x = np.asarray(x)
        if self.kind is FactorKind.ONE:
            return np.zeros_like(x, dtype=np.result_type(x, float))
        if self.kind is FactorKind.EXP_LINEAR:
            return np.full_like(x, self.param, dtype=np.result_type(x, float))
        coeffs = np.asarray(self.param)
        deriv = np.polynomial.polynomial.polyder(coeffs) if len(coeffs) > 1 else np.zeros(1)
        return (np.polynomial.polynomial.polyval(x, deriv)
                / np.polynomial.polynomial.polyval(x, coeffs))

    def reflected(self) -> "AnalyticFactor":
        """Return the factor x -> h(-x)."""
        if self.kind is FactorKind.ONE:
            return self
        if self.kind is FactorKind.EXP_LINEAR:
            return AnalyticFactor.exp_linear(-self.param)
        return AnalyticFactor.polynomial(
            [c * (-1) ** k for k, c in enumerate(self.param)]
        )

    def scaled(self, k: float) -> "AnalyticFactor":
        """Return k*h; only closed under scaling for ONE and POLYNOMIAL."""
        if self.kind is FactorKind.ONE:
            return AnalyticFactor.polynomial([k])
        if self.kind is FactorKind.POLYNOMIAL:
            return AnalyticFactor.polynomial([k * c for c in self.param])
        raise ValueError(f"Factor kind {self.kind.value} is not closed under scaling")

    @property
    def is_even(self) -> bool:
        if self.kind is FactorKind.ONE:
            return True
        if self.kind is FactorKind.EXP_LINEAR:
            return self.param == 0.0
        return all(c == 0.0 for c in self.param[1::2])

    def to_record(self) -> Dict[str, Any]:
        param: Any = list(self.param) if isinstance(self.param, tuple) else self.param
        return {"h.kind": self.kind.value, "h.param": param}

    @classmethod
    def from_record(cls, kind: str, param: Any = None) -> "AnalyticFactor":
        """Build a factor from the flat `h.kind` / `h.param` pair."""
        try:
            factor_kind = FactorKind(str(kind).lower())
        except ValueError:
            allowed = ", ".join(k.value for k in FactorKind)
            raise ValueError(f"Unknown h.kind '{kind}' (expected one of: {allowed})")

        if factor_kind is FactorKind.ONE:
            return cls.one()
        if factor_kind is FactorKind.EXP_LINEAR:
            if param is None or isinstance(param, (list, tuple)):
                raise ValueError("h.kind=exp_linear needs a scalar h.param")
            return cls.exp_linear(float(param))
        if param is None:
            raise ValueError("h.kind=polynomial needs a coefficient list in h.param")
        if not isinstance(param, (list, tuple)):
            param = [param]
        return cls.polynomial(param)


@dataclass(frozen=True)
class WeightParams:
    """
    Full parameter set of the generalized Jacobi weight.

    Derived quantities (c, log_c, lambda_im, mu) are computed at
    construction; `validate` checks the admissibility constraints.
    """

    alpha: float
    beta: float
    gamma: float
    x0: float
    c2: float = 1.0
    h: AnalyticFactor = field(default_factory=AnalyticFactor.one)

    # Derived
    c: float = field(init=False)
    log_c: float = field(init=False)
    lambda_im: float = field(init=False)   # lambda = i * lambda_im
    mu: float = field(init=False)

    def __post_init__(self):
        if self.c2 > 0:
            c = math.sqrt(self.c2)
            log_c = 0.5 * math.log(self.c2)
        else:
            c = log_c = float("nan")
        lambda_im = log_c / math.pi
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "log_c", log_c)
        object.__setattr__(self, "lambda_im", lambda_im)
        object.__setattr__(self, "mu", -lambda_im)

    @property
    def lam(self) -> complex:
        """lambda = i log(c) / pi (purely imaginary)."""
        return complex(0.0, self.lambda_im)

    @property
    def r0(self) -> float:
        """sqrt(1 - x0^2)."""
        return math.sqrt(1.0 - self.x0 * self.x0)

    @property
    def is_degenerate(self) -> bool:
        """True when there is neither an algebraic singularity nor a jump."""
        return self.gamma == 0.0 and self.c2 == 1.0

    @property
    def is_symmetric(self) -> bool:
        return (self.alpha == self.beta and self.x0 == 0.0
                and self.c2 == 1.0 and self.h.is_even)

    def reflected(self) -> "WeightParams":
        """Parameters of x -> w(-x) up to the constant factor c2."""
        return WeightParams(
            alpha=self.beta,
            beta=self.alpha,
            gamma=self.gamma,
            x0=-self.x0,
            c2=1.0 / self.c2,
            h=self.h.reflected(),
        )

    def to_record(self) -> Dict[str, Any]:
        """Flat key/value record used by the configuration layer."""
        record: Dict[str, Any] = {
            "alpha": self.alpha,
            "beta": self.beta,
            "gamma": self.gamma,
            "x0": self.x0,
            "c2": self.c2,
        }
        record.update(self.h.to_record())
        return record

    @classmethod
    def from_record(cls, record: Dict[str, Any]) -> "WeightParams":
        h = AnalyticFactor.from_record(record.get("h.kind", "one"), record.get("h.param"))
        return cls(
            alpha=float(record["alpha"]),
            beta=float(record["beta"]),
            gamma=float(record["gamma"]),
            x0=float(record["x0"]),
            c2=float(record.get("c2", 1.0)),
            h=h,
        )

    @classmethod
    def from_magnus(
        cls,
        alpha: float,
        beta: float,
        gamma: float,
        x0: float,
        A: float,
        B: float,
    ) -> "WeightParams":
        """
        Convert the (A, B) jump convention (B left of x0, A right of x0).

        The left value becomes the constant factor h = B and the jump
        height is c2 = A/B.
        """
        if B <= 0:
            raise JumpNonPositive(B)
        return cls(alpha, beta, gamma, x0, c2=A / B, h=AnalyticFactor.polynomial([B]))


def _positivity_grid() -> NDArray:
    uniform = np.linspace(-1.0, 1.0, POSITIVITY_GRID_POINTS)
    extrema = np.cos(np.pi * np.arange(POSITIVITY_GRID_POINTS) / (POSITIVITY_GRID_POINTS - 1))
    return np.concatenate([uniform, extrema])


def validate(params: WeightParams) -> WeightParams:
    """
    Check the admissibility constraints of the weight.

    Args:
        params: Candidate parameters

    Returns:
        The same parameters (derived fields already filled)

    Raises:
        ExponentOutOfRange: alpha, beta or gamma <= -1
        X0OutOfRange: |x0| >= 1
        JumpNonPositive: c2 <= 0
        FactorNotPositive: h <= 0 somewhere on the sample grid
    """
    for name in ("alpha", "beta", "gamma"):
        value = getattr(params, name)
        if not value > -1.0:
            raise ExponentOutOfRange(name, value)

    if not -1.0 < params.x0 < 1.0:
        raise X0OutOfRange(params.x0)

    if not params.c2 > 0.0:
        raise JumpNonPositive(params.c2)

    grid = _positivity_grid()
    values = params.h.value(grid)
    bad = np.flatnonzero(~(values > 0.0))
    if bad.size:
        i = int(bad[0])
        raise FactorNotPositive(float(grid[i]), float(values[i]))

    logger.debug(
        "weight_params_validated",
        alpha=params.alpha, beta=params.beta, gamma=params.gamma,
        x0=params.x0, c2=params.c2, h=params.h.kind.value, mu=params.mu,
    )
    return params


def with_factor(params: WeightParams, h: AnalyticFactor) -> WeightParams:
    """Copy of `params` with a different analytic factor."""
    return replace(params, h=h)


def eval_weight(params: WeightParams, x: ArrayLike) -> Any:
    """
    Evaluate w(x) on [-1, 1].

    Xi(x0) is taken as c2 (half-open split [-1, x0) / [x0, 1]).

    Raises:
        EvalAtNonintegrableSingularity: x hits -1, 1 or x0 where the
            corresponding exponent is negative
        ValueError: x outside [-1, 1]
    """
    xs = np.asarray(x, dtype=float)
    if np.any((xs < -1.0) | (xs > 1.0)):
        raise ValueError(f"x must lie in [-1, 1], got {x}")

    singular_points = (
        (1.0, "alpha", params.alpha),
        (-1.0, "beta", params.beta),
        (params.x0, "gamma", params.gamma),
    )
    for point, name, exponent in singular_points:
        if exponent < 0 and np.any(xs == point):
            raise EvalAtNonintegrableSingularity(point, name, exponent)

    with np.errstate(divide="ignore"):
        w = (np.power(1.0 - xs, params.alpha)
             * np.power(1.0 + xs, params.beta)
             * np.power(np.abs(params.x0 - xs), params.gamma)
             * params.h.value(xs)
             * np.where(xs < params.x0, 1.0, params.c2))

    if np.ndim(x) == 0:
        return float(w)
    return w
