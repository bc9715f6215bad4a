"""
Symmetric tridiagonal (Jacobi) matrices and their eigendecomposition.
"""

from dataclasses import dataclass
from typing import Tuple

import numpy as np
import structlog
from numpy.typing import ArrayLike, NDArray
from scipy.linalg import LinAlgError, eigh_tridiagonal

from genjacobi.errors import NoConvergence

logger = structlog.get_logger(__name__)


@dataclass(frozen=True)
class SymTridiag:
    """Jacobi matrix: `diag` of length m, nonnegative `offdiag` of length m-1."""

    diag: NDArray
    offdiag: NDArray

    def __post_init__(self):
        diag = np.asarray(self.diag, dtype=float).reshape(-1)
        offdiag = np.asarray(self.offdiag, dtype=float).reshape(-1)
        if diag.size == 0:
            raise ValueError("Jacobi matrix must have at least one diagonal entry")
        if offdiag.size != diag.size - 1:
            raise ValueError(
                f"offdiag must have length {diag.size - 1}, got {offdiag.size}"
            )
        if np.any(offdiag < 0):
            raise ValueError("offdiag entries of a Jacobi matrix must be >= 0")
        object.__setattr__(self, "diag", diag)
        object.__setattr__(self, "offdiag", offdiag)

    @classmethod
    def from_recurrence(cls, b: ArrayLike, a2: ArrayLike) -> "SymTridiag":
        """
        Build the Jacobi matrix of monic recurrence coefficients.

        Args:
            b: b_0 .. b_{m-1}
            a2: a_1^2 .. a_{m-1}^2
        """
        return cls(np.asarray(b, dtype=float), np.sqrt(np.asarray(a2, dtype=float)))

    @property
    def size(self) -> int:
        return int(self.diag.size)

    def dense(self) -> NDArray:
        return (np.diag(self.diag)
                + np.diag(self.offdiag, 1)
                + np.diag(self.offdiag, -1))


def tridiag_eigen(t: SymTridiag) -> Tuple[NDArray, NDArray]:
    """
    Golub-Welsch step: eigenvalues and squared first eigenvector components.

    Args:
        t: Jacobi matrix

    Returns:
        (eigenvalues ascending, first_components_squared), both of length m

    Raises:
        NoConvergence: the LAPACK tridiagonal solver did not converge
    """
    if t.size == 1:
        return t.diag.copy(), np.ones(1)

    try:
        eigenvalues, vectors = eigh_tridiagonal(t.diag, t.offdiag)
    except LinAlgError as exc:
        logger.error("tridiag_eigen_failed", size=t.size, error=str(exc))
        raise NoConvergence(t.size, str(exc)) from exc

    if not np.all(np.isfinite(eigenvalues)):
        raise NoConvergence(t.size, "non-finite eigenvalues")

    first = vectors[0, :] ** 2
    return eigenvalues, first
