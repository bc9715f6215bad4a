"""Tests for Gauss-type quadrature rules"""

import math

import numpy as np
import pytest
from scipy.special import gamma as gamma_fn

from genjacobi.params import AnalyticFactor, WeightParams
from genjacobi.quadrature import (
    SymTridiag,
    composite_rule,
    gauss_chebyshev,
    gauss_jacobi,
    jacobi_mass,
    jacobi_recurrence,
    required_nodes_per_piece,
    tridiag_eigen,
)
from genjacobi.recurrence import stieltjes


def test_tridiag_single_entry():
    """Test a 1x1 Jacobi matrix."""
    values, first = tridiag_eigen(SymTridiag([5.0], []))
    assert values.tolist() == [5.0]
    assert first.tolist() == [1.0]


def test_tridiag_two_by_two():
    """Test [[0, 1], [1, 0]] has eigenvalues -1, 1 with equal first components."""
    values, first = tridiag_eigen(SymTridiag([0.0, 0.0], [1.0]))
    np.testing.assert_allclose(values, [-1.0, 1.0], atol=1e-15)
    np.testing.assert_allclose(first, [0.5, 0.5], atol=1e-15)


def test_tridiag_rejects_bad_shapes():
    """Test mismatched or negative off-diagonals are rejected."""
    with pytest.raises(ValueError):
        SymTridiag([0.0, 0.0], [1.0, 1.0])
    with pytest.raises(ValueError):
        SymTridiag([0.0, 0.0], [-1.0])


def test_gauss_legendre_two_nodes():
    """Test the 2-point Gauss-Legendre rule."""
    rule = gauss_jacobi(2, 0.0, 0.0)
    root = 1.0 / math.sqrt(3.0)
    np.testing.assert_allclose(rule.nodes, [-root, root], atol=1e-15)
    np.testing.assert_allclose(rule.weights, [1.0, 1.0], atol=1e-14)
    assert rule.exact_degree == 3


def test_gauss_chebyshev_three_nodes():
    """Test the closed-form Chebyshev rule against Golub-Welsch."""
    closed = gauss_chebyshev(3)
    computed = gauss_jacobi(3, -0.5, -0.5)
    expected = [-math.sqrt(3.0) / 2.0, 0.0, math.sqrt(3.0) / 2.0]
    np.testing.assert_allclose(closed.nodes, expected, atol=1e-15)
    np.testing.assert_allclose(computed.nodes, expected, atol=1e-14)
    np.testing.assert_allclose(computed.weights, [math.pi / 3.0] * 3, atol=1e-13)


@pytest.mark.parametrize("p,q", [(0.0, 0.0), (-0.5, 0.3), (1.5, -0.7)])
def test_jacobi_mass(p, q):
    """Test the mass against the Gamma-function closed form."""
    expected = 2.0 ** (p + q + 1.0) * gamma_fn(p + 1.0) * gamma_fn(q + 1.0) / gamma_fn(p + q + 2.0)
    assert jacobi_mass(p, q) == pytest.approx(expected, rel=1e-13)
    assert gauss_jacobi(20, p, q).mass == pytest.approx(expected, rel=1e-12)


def test_jacobi_recurrence_legendre():
    """Test the Legendre coefficients a_k^2 = k^2/(4k^2-1), b_k = 0."""
    b, a2 = jacobi_recurrence(30, 0.0, 0.0)
    k = np.arange(1, 30)
    np.testing.assert_allclose(b, 0.0, atol=1e-16)
    np.testing.assert_allclose(a2[1:], k ** 2 / (4.0 * k ** 2 - 1.0), rtol=1e-14)
    assert a2[0] == pytest.approx(2.0)


def test_gauss_jacobi_exactness_on_subinterval():
    """Test a mapped rule integrates a polynomial against its weight exactly."""
    rule = gauss_jacobi(6, 0.5, -0.5, (0.2, 1.0))
    # (1 - x)^0.5 (x - 0.2)^-0.5 x^3 vs a fine rule on the same piece
    fine = gauss_jacobi(80, 0.5, -0.5, (0.2, 1.0))
    assert rule.integrate(lambda x: x ** 3) == pytest.approx(fine.integrate(lambda x: x ** 3), rel=1e-13)


def test_gauss_jacobi_rejects_bad_input():
    """Test invalid sizes and intervals."""
    with pytest.raises(ValueError):
        gauss_jacobi(0, 0.0, 0.0)
    with pytest.raises(ValueError):
        gauss_jacobi(3, 0.0, 0.0, (0.5, 0.5))


@pytest.mark.parametrize(
    "params,mass",
    [
        (WeightParams(0.0, 0.0, 0.0, 0.0), 2.0),
        (WeightParams(0.0, 0.0, 1.0, 0.0), 1.0),
        (WeightParams(0.0, 0.0, 0.0, 0.0, c2=2.0), 3.0),
    ],
)
def test_composite_rule_mass(params, mass):
    """Test total masses of Legendre, |x| and a jump weight."""
    rule = composite_rule(params, 32)
    assert rule.mass == pytest.approx(mass, abs=1e-12)
    assert len(rule) == 64
    assert rule.nodes_per_piece == 32
    assert (rule.weights > 0).all()


def test_composite_rule_splits_at_x0(generic):
    """Test left nodes lie below x0 and right nodes above it."""
    rule = composite_rule(generic, 16)
    assert (rule.nodes[:16] < generic.x0).all()
    assert (rule.nodes[16:] > generic.x0).all()


def test_required_nodes_per_piece():
    """Test the sizing rule exceeds 2 * n_max."""
    assert required_nodes_per_piece(100) > 200


def _jacobi_moments(k_max, p, q):
    # integration by parts: (k + p + q + 2) m_{k+1} = k m_{k-1} + (q - p) m_k
    m = [jacobi_mass(p, q)]
    m.append((q - p) * m[0] / (p + q + 2.0))
    for k in range(1, k_max):
        m.append((k * m[k - 1] + (q - p) * m[k]) / (k + p + q + 2.0))
    return m[:k_max + 1]


@pytest.mark.parametrize("p,q", [(0.0, 0.0), (0.3, -0.4), (-0.5, 0.7), (1.3, 2.0)])
@pytest.mark.parametrize("n_nodes", [1, 4, 9])
def test_gauss_jacobi_monomial_exactness(n_nodes, p, q):
    """Test every x^k with k <= 2n - 1 against closed-form Jacobi moments."""
    rule = gauss_jacobi(n_nodes, p, q)
    moments = _jacobi_moments(2 * n_nodes - 1, p, q)
    for k, expected in enumerate(moments):
        got = float(np.sum(rule.weights * rule.nodes ** k))
        assert got == pytest.approx(expected, rel=1e-12, abs=1e-14)


def test_orthogonality_under_finer_rule():
    """Test monic polynomials from the recurrence are orthogonal up to degree 30."""
    params = WeightParams(-0.4, 0.7, 1.3, 0.3, c2=2.0, h=AnalyticFactor.exp_linear(1.0))
    table = stieltjes(params, 31)
    rule = composite_rule(params, 2 * required_nodes_per_piece(31))

    x = rule.nodes
    values = np.empty((31, x.size))
    values[0] = 1.0
    values[1] = x - table.b[0]
    for k in range(1, 30):
        values[k + 1] = (x - table.b[k]) * values[k] - table.a2[k] * values[k - 1]

    gram = (values * rule.weights) @ values.T
    scale = np.sqrt(np.outer(np.diag(gram), np.diag(gram)))
    off = np.abs(gram / scale - np.eye(31))
    assert off.max() < 1e-9
    assert gram[0, 0] == pytest.approx(table.mass, rel=1e-12)
