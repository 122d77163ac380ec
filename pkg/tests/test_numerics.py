"""Tests for numerics module."""

import math

import numpy as np
import pytest

from src.numerics.scalar import (
    log_sigmoid,
    log_sigmoid_variance,
    sigmoid,
    sigmoid_difference,
    softplus,
)


def test_sigmoid_reference_values():
    """Test sigmoid at its symmetry point and at ln 3."""
    assert sigmoid(0.0) == 0.5
    assert sigmoid(math.log(3.0)) == pytest.approx(0.75, rel=1e-12)


def test_sigmoid_far_negative_tail_is_finite():
    """Test that sigmoid(-700) underflows gracefully instead of overflowing."""
    value = float(sigmoid(-700.0))
    assert np.isfinite(value)
    assert 0.0 <= value <= 1e-300


def test_softplus_reference_values():
    """Test softplus at zero and deep in both tails."""
    assert softplus(0.0) == pytest.approx(math.log(2.0), rel=1e-12)
    assert softplus(50.0) == pytest.approx(50.0, abs=1e-12)
    tail = float(softplus(-50.0))
    assert 0.0 < tail <= 1e-21


def test_log_sigmoid_reference_values():
    """Test log_sigmoid at zero, far left, and against direct evaluation."""
    assert log_sigmoid(0.0) == pytest.approx(-math.log(2.0), rel=1e-12)
    far = float(log_sigmoid(-1000.0))
    assert np.isfinite(far)
    assert far == pytest.approx(-1000.0, rel=1e-12)
    direct = math.log(1.0 / (1.0 + math.exp(-5.0)))
    assert log_sigmoid(5.0) == pytest.approx(direct, rel=1e-12)


def test_sigmoid_complement_identity():
    """Test 1 - sigmoid(x) = sigmoid(-x) on [-50, 50]."""
    x = np.arange(-50.0, 50.25, 0.25)
    assert np.max(np.abs(1.0 - sigmoid(x) - sigmoid(-x))) <= 1e-12


def test_sigmoid_derivative_identity():
    """Test that a central difference of sigmoid matches sigmoid * (1 - sigmoid)."""
    x = np.linspace(-10.0, 10.0, 201)
    h = 1e-5
    numeric = (sigmoid(x + h) - sigmoid(x - h)) / (2.0 * h)
    analytic = sigmoid(x) * (1.0 - sigmoid(x))
    assert np.max(np.abs(numeric - analytic)) <= 1e-6


def test_log_sigmoid_softplus_identity():
    """Test log_sigmoid(x) = x - softplus(x) on [-30, 30]."""
    x = np.arange(-30.0, 30.25, 0.25)
    assert np.max(np.abs(log_sigmoid(x) - (x - softplus(x)))) <= 1e-12


def test_softplus_strictly_increasing():
    """Test that softplus is strictly monotone on the identity grid."""
    values = softplus(np.arange(-50.0, 50.25, 0.25))
    assert np.all(np.diff(values) > 0)


def test_sigmoid_difference_upper_tail():
    """Test that the difference of two saturated sigmoids keeps its digits."""
    expected = math.exp(-39.0) - math.exp(-40.0)
    assert sigmoid_difference(40.0, 39.0) == pytest.approx(expected, rel=1e-9)
    assert sigmoid_difference(39.0, 40.0) == pytest.approx(-expected, rel=1e-9)


def test_sigmoid_difference_matches_direct_form():
    """Test sigmoid_difference against the naive form where both are accurate."""
    a = np.linspace(-5.0, 5.0, 41)
    b = a[::-1] * 0.3
    assert np.allclose(sigmoid_difference(a, b), sigmoid(a) - sigmoid(b), atol=1e-15)


def test_log_sigmoid_variance():
    """Test ln(sigma * (1 - sigma)) at the center and far outside the raw range."""
    assert log_sigmoid_variance(0.0) == pytest.approx(math.log(0.25), rel=1e-12)
    assert log_sigmoid_variance(800.0) == pytest.approx(-800.0, rel=1e-12)
    assert log_sigmoid_variance(-800.0) == pytest.approx(-800.0, rel=1e-12)
