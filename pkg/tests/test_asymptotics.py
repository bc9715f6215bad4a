"""Tests for the oscillatory asymptotic predictions"""

import math

import numpy as np
import pytest

from genjacobi.asymptotics import (
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
from genjacobi.asymptotics import predictions as predictions_module
from genjacobi.errors import DegenerateNoSingularity, NonRealReconstruction
from genjacobi.params import AnalyticFactor, WeightParams


@pytest.mark.parametrize(
    "params,expected",
    [
        (WeightParams(0.0, 0.0, 1.0, 0.0), 0.0),
        (WeightParams(-0.5, -0.5, 2.0, 0.0), 0.0),
        (WeightParams(0.0, 0.0, 1.0, 0.0, h=AnalyticFactor.exp_linear(1.0)), -1.0),
    ],
)
def test_big_theta_examples(params, expected):
    """Test Theta for hand-computed parameter sets."""
    assert big_theta(params) == pytest.approx(expected, abs=1e-12)


def test_big_theta_degenerate(legendre):
    """Test Theta is undefined without a singularity."""
    with pytest.raises(DegenerateNoSingularity):
        big_theta(legendre)
    with pytest.raises(DegenerateNoSingularity):
        varsigma(legendre)


def test_big_theta_scale_invariant(generic):
    """Test a constant rescaling of h leaves Theta unchanged."""
    scaled = WeightParams(generic.alpha, generic.beta, generic.gamma, generic.x0, generic.c2,
                          AnalyticFactor.polynomial([3.0]))
    assert big_theta(scaled) == pytest.approx(big_theta(generic), abs=1e-12)


def test_amplitude(abs_weight):
    """Test M = 1/4 for |x|."""
    assert amplitude(abs_weight) == pytest.approx(0.25)


def test_predict_abs_weight(abs_weight):
    """Test a_10 = 0.475 and b_10 = 0 for |x|."""
    pred = predict(abs_weight, [10])
    a, b = pred.at(10)
    assert a == pytest.approx(0.475, abs=1e-12)
    assert b == pytest.approx(0.0, abs=1e-12)
    assert pred.theta[0] == pytest.approx(10.0 * math.pi, abs=1e-10)


def test_predict_degenerate(legendre):
    """Test gamma = 0, c2 = 1 gives the limits exactly."""
    pred = predict(legendre, range(1, 20))
    assert pred.big_theta is None
    assert pred.amplitude == 0.0
    assert (pred.a_tilde == 0.5).all()
    assert (pred.b_tilde == 0.0).all()
    assert np.isnan(pred.theta).all()


def test_predict_symmetric_has_no_b():
    """Test alpha = beta, x0 = 0, c2 = 1 predicts b = 0."""
    params = WeightParams(0.2, 0.2, 0.6, 0.0)
    pred = predict(params, range(1, 200))
    assert np.max(np.abs(pred.b_tilde)) <= 1e-12


def test_predict_sign_conventions(generic):
    """Test the two layouts differ by the sign of the correction."""
    remark = predict(generic, range(1, 50))
    theorem = predict(generic, range(1, 50), SignConvention.THEOREM)
    np.testing.assert_allclose(remark.a_tilde - 0.5, -(theorem.a_tilde - 0.5), atol=1e-15)
    np.testing.assert_allclose(remark.b_tilde, -theorem.b_tilde, atol=1e-15)


def test_predict_reflection(generic_exp):
    """Test x -> -x keeps a_tilde and flips b_tilde."""
    ns = range(1, 100)
    pred = predict(generic_exp, ns)
    mirrored = predict(generic_exp.reflected(), ns)
    np.testing.assert_allclose(mirrored.a_tilde, pred.a_tilde, atol=1e-12)
    np.testing.assert_allclose(mirrored.b_tilde, -pred.b_tilde, atol=1e-12)


def test_predict_rejects_zero_degree(generic):
    """Test degrees start at 1."""
    with pytest.raises(ValueError):
        predict(generic, [0, 1])


@pytest.mark.parametrize("n", [1, 7, 50, 333])
def test_theta_matches_eta_form(generic_exp, n):
    """Test theta_n = 2 eta_n + varsigma modulo 2 pi."""
    diff = theta_n(generic_exp, n) - (2.0 * eta_n(generic_exp, n) + varsigma(generic_exp))
    assert abs(math.remainder(diff, 2.0 * math.pi)) <= 1e-9


def test_theta_array_input(generic):
    """Test array degrees return an array."""
    values = theta_n(generic, np.array([1, 2, 3]))
    assert values.shape == (3,)
    assert values[0] == pytest.approx(theta_n(generic, 1))


def test_residues_vanishing_cases():
    """Test A1 at alpha = 1/2 and C1 in the degenerate case."""
    res = residues(WeightParams(0.5, 0.0, 0.0, 0.0), 5)
    assert np.all(res.a1 == 0)
    assert np.all(res.c1 == 0)


def test_residues_c11_example(abs_weight):
    """Test C11 = sin(pi)/4 = 0 at n = 1 for |x|."""
    res = residues(abs_weight, 1)
    assert abs(res.c1[0, 0]) <= 1e-14


def test_residues_traceless(generic_exp):
    """Test every residue matrix has zero trace."""
    for n in (1, 10, 100):
        res = residues(generic_exp, n)
        for matrix in (res.a1, res.b1, res.c1):
            assert abs(np.trace(matrix)) <= 1e-14


def test_reconstruction_legendre(legendre):
    """Test the endpoint contributions cancel for Legendre."""
    for n in (1, 10, 100):
        a, b = first_order_reconstruction(legendre, n)
        assert a == pytest.approx(0.5, abs=1e-14)
        assert b == pytest.approx(0.0, abs=1e-14)


def test_reconstruction_symmetric_b():
    """Test alpha = beta, x0 = 0, c2 = 1 reconstructs b = 0."""
    params = WeightParams(0.25, 0.25, 1.5, 0.0)
    for n in (3, 30, 300):
        _, b = first_order_reconstruction(params, n)
        assert abs(b) <= 1e-12


def test_reconstruction_rejects_complex_coefficients(generic, monkeypatch):
    """Test an imaginary part left in b_n raises instead of being dropped."""
    def skewed(params, n, d_inf=None):
        zero = np.zeros((2, 2), dtype=complex)
        return predictions_module.ResidueSet(n=n, a1=zero, b1=zero,
                                             c1=np.array([[0.0, 0.0], [0.0, 1j]]))

    monkeypatch.setattr(predictions_module, "residues", skewed)
    with pytest.raises(NonRealReconstruction) as exc:
        first_order_reconstruction(generic, 10)
    assert exc.value.name == "b"
    assert exc.value.n == 10


@pytest.mark.parametrize("fixture", ["generic", "generic_exp"])
def test_reconstruction_matches_predict(fixture, request):
    """Test both first-order forms agree to O(1/n^2)."""
    params = request.getfixturevalue(fixture)
    ns = [20, 50, 100, 200]
    pred = predict(params, ns)
    for n in ns:
        a, b = first_order_reconstruction(params, n)
        a_tilde, b_tilde = pred.at(n)
        assert n * n * abs(a - a_tilde) <= 1.0
        assert n * n * abs(b - b_tilde) <= 1.0
