"""Optimality module - Sigmoid optimality model, level geometry and running value bounds."""

from .levels import OptimalityConfig, level_centers, sharpness_scale, optimality_prob
from .bounds import BoundsTracker, update_bounds, MIN_BOUND_GAP

__all__ = [
    "OptimalityConfig",
    "level_centers",
    "sharpness_scale",
    "optimality_prob",
    "BoundsTracker",
    "update_bounds",
    "MIN_BOUND_GAP",
]
