"""Tests for optimality module."""

import math

import numpy as np
import pytest

from src.errors import DegenerateBatchError
from src.optimality.bounds import MIN_BOUND_GAP, BoundsTracker, update_bounds
from src.optimality.levels import (
    OptimalityConfig,
    level_centers,
    optimality_prob,
    sharpness_scale,
)


def test_level_centers_examples():
    """Test evenly spaced interior centers."""
    assert level_centers(OptimalityConfig(4.0, 4, 0.0, 1.0)) == pytest.approx([0.2, 0.4, 0.6, 0.8])
    assert level_centers(OptimalityConfig(4.0, 1, -1.0, 1.0)) == pytest.approx([0.0])
    assert level_centers(OptimalityConfig(4.0, 4, 2.0, 12.0)) == pytest.approx([4, 6, 8, 10])


def test_level_centers_spacing():
    """Test that centers are strictly increasing with gap span / (L + 1)."""
    cfg = OptimalityConfig(1.0, 9, -3.0, 7.0)
    centers = np.array(level_centers(cfg))
    assert np.allclose(np.diff(centers), 1.0)
    assert centers[0] > cfg.bound_lo and centers[-1] < cfg.bound_hi


def test_sharpness_scale_examples():
    """Test lambda_O = lambda (L + 1) / span."""
    assert sharpness_scale(OptimalityConfig(4.0, 4, 0.0, 1.0)) == pytest.approx(20.0)
    assert sharpness_scale(OptimalityConfig(4.0, 1, -1.0, 1.0)) == pytest.approx(4.0)
    assert sharpness_scale(OptimalityConfig(1.0, 9, 0.0, 10.0)) == pytest.approx(1.0)


def test_optimality_prob_examples():
    """Test the optimality probability at the center, at ln 3 / lambda_O and at the bound."""
    assert optimality_prob(0.7, 0.7, 13.0) == 0.5
    assert optimality_prob(0.2 + math.log(3.0) / 5.0, 0.2, 5.0) == pytest.approx(0.75)
    cfg = OptimalityConfig(4.0, 1, -1.0, 1.0)
    mu = level_centers(cfg)[0]
    assert optimality_prob(cfg.bound_hi, mu, sharpness_scale(cfg)) == pytest.approx(
        0.98201, abs=1e-5
    )


def test_optimality_prob_monotone():
    """Test that the optimality probability increases with V."""
    v = np.linspace(-3.0, 3.0, 61)
    assert np.all(np.diff(optimality_prob(v, 0.0, 2.0)) > 0)


@pytest.mark.parametrize(
    "sharpness,levels,lo,hi",
    [(0.0, 4, 0.0, 1.0), (4.0, 0, 0.0, 1.0), (4.0, 4, 1.0, 1.0), (4.0, 4, 2.0, 1.0)],
)
def test_optimality_config_rejects_invalid(sharpness, levels, lo, hi):
    """Test validation of sharpness, level count and bound ordering."""
    with pytest.raises(ValueError):
        OptimalityConfig(sharpness, levels, lo, hi)


def test_tracker_beta_from_epsilon_and_horizon():
    """Test that beta is epsilon ** (1 / horizon)."""
    tracker = BoundsTracker(epsilon=1e-5, horizon=200)
    assert tracker.beta == 1e-5 ** (1.0 / 200)


def test_tracker_seeds_from_first_batch():
    """Test seeding from the first batch's extremes plus/minus epsilon."""
    tracker = BoundsTracker()
    tracker.update([0.3, -0.2])
    assert tracker.initialized
    assert tracker.bound_hi == pytest.approx(0.30001)
    assert tracker.bound_lo == pytest.approx(-0.20001)


def test_tracker_moving_update():
    """Test one geometric update by direct substitution."""
    tracker = BoundsTracker(bound_lo=0.0, bound_hi=1.0, initialized=True)
    tracker.beta = 0.9
    tracker.update([2.0, 0.5])
    assert tracker.bound_hi == pytest.approx(1.100001)
    assert tracker.bound_lo == pytest.approx(0.9 * 0.0 + 0.1 * (0.5 - 1e-5))


def test_tracker_closed_form():
    """Test n updates with fixed extremes against the geometric closed form."""
    tracker = BoundsTracker(bound_lo=-5.0, bound_hi=5.0, initialized=True)
    n = 37
    for _ in range(n):
        tracker.update([0.0, 1.0])
    decay = tracker.beta**n
    assert tracker.bound_hi == pytest.approx(decay * 5.0 + (1 - decay) * (1.0 + 1e-5), rel=1e-9)
    assert tracker.bound_lo == pytest.approx(decay * -5.0 + (1 - decay) * (0.0 - 1e-5), rel=1e-9)


def test_tracker_residual_after_horizon():
    """Test that after K updates the initial bound keeps at most epsilon of its gap."""
    tracker = BoundsTracker(
        epsilon=1e-5, horizon=200, bound_lo=-5.0, bound_hi=5.0, initialized=True
    )
    target_hi, target_lo = 1.0 + 1e-5, 0.0 - 1e-5
    for _ in range(200):
        tracker.update([0.0, 1.0])
    tolerance = 1.0 + 1e-6
    assert abs(tracker.bound_hi - target_hi) <= 1e-5 * abs(5.0 - target_hi) * tolerance
    assert abs(tracker.bound_lo - target_lo) <= 1e-5 * abs(-5.0 - target_lo) * tolerance


def test_tracker_order_insensitive():
    """Test that only the batch extremes matter."""
    first, second = BoundsTracker(), BoundsTracker()
    for batch in ([0.4, -1.0, 2.5], [1.0, 0.0], [3.0, -2.0, 0.5]):
        first.update(batch)
        second.update(list(reversed(batch)))
    assert (first.bound_lo, first.bound_hi) == (second.bound_lo, second.bound_hi)


def test_tracker_rejects_degenerate_batches():
    """Test that empty and non-finite batches are rejected."""
    tracker = BoundsTracker()
    with pytest.raises(DegenerateBatchError, match="degenerate batch"):
        tracker.update([])
    with pytest.raises(DegenerateBatchError):
        tracker.update([0.0, float("nan")])
    assert not tracker.initialized


def test_tracker_widens_collapsed_bounds():
    """Test that a constant batch with tiny epsilon still leaves a usable gap."""
    tracker = BoundsTracker(epsilon=1e-9)
    tracker.update([0.5, 0.5])
    assert tracker.bound_hi - tracker.bound_lo == pytest.approx(MIN_BOUND_GAP, rel=1e-6)
    assert 0.5 * (tracker.bound_hi + tracker.bound_lo) == pytest.approx(0.5)


def test_tracker_to_config():
    """Test the immutable snapshot of the running bounds."""
    tracker = BoundsTracker()
    with pytest.raises(DegenerateBatchError):
        tracker.to_config(4.0, 4)
    update_bounds(tracker, [0.0, 1.0])
    cfg = tracker.to_config(4.0, 4)
    assert cfg.bound_lo == tracker.bound_lo and cfg.bound_hi == tracker.bound_hi
    assert cfg.levels == 4 and cfg.sharpness == 4.0
