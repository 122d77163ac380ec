"""Running estimate of the value upper/lower bounds."""

import logging
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from ..errors import DegenerateBatchError
from .levels import OptimalityConfig

logger = logging.getLogger(__name__)

# Narrowest allowed gap between the bounds; keeps lambda_O finite
MIN_BOUND_GAP = 1e-6


@dataclass
class BoundsTracker:
    """Geometric moving estimate of max/min V(s) over replayed batches.

    ``beta = epsilon ** (1 / horizon)`` so that after ``horizon`` updates the weight
    left on any earlier value is exactly ``epsilon``.
    """
    epsilon: float = 1e-5
    horizon: int = 200
    bound_lo: float = 0.0
    bound_hi: float = 0.0
    initialized: bool = False
    beta: float = field(init=False)

    def __post_init__(self):
        if not self.epsilon > 0:
            raise ValueError(f"epsilon must be positive, got {self.epsilon}")
        if self.horizon <= 0:
            raise ValueError(f"horizon must be positive, got {self.horizon}")
        self.beta = self.epsilon ** (1.0 / self.horizon)

    def update(self, batch_values: Sequence[float]) -> "BoundsTracker":
        """Fold one batch of V(s) estimates into the bounds (in place)."""
        values = np.asarray(batch_values, dtype=float).ravel()
        if values.size == 0:
            raise DegenerateBatchError("degenerate batch: no values to update bounds from")
        if not np.all(np.isfinite(values)):
            raise DegenerateBatchError("degenerate batch: non-finite value estimates")

        upper = float(values.max()) + self.epsilon
        lower = float(values.min()) - self.epsilon
        if not self.initialized:
            self.bound_hi, self.bound_lo = upper, lower
            self.initialized = True
        else:
            self.bound_hi = self.beta * self.bound_hi + (1.0 - self.beta) * upper
            self.bound_lo = self.beta * self.bound_lo + (1.0 - self.beta) * lower

        if self.bound_hi - self.bound_lo < MIN_BOUND_GAP:
            center = 0.5 * (self.bound_hi + self.bound_lo)
            self.bound_hi = center + 0.5 * MIN_BOUND_GAP
            self.bound_lo = center - 0.5 * MIN_BOUND_GAP
            logger.debug(f"bounds widened around {center:.6g}")
        return self

    def to_config(self, sharpness: float, levels: int) -> OptimalityConfig:
        """Immutable snapshot of the current bounds."""
        if not self.initialized:
            raise DegenerateBatchError("bounds tracker has not seen any batch yet")
        return OptimalityConfig(
            sharpness=sharpness, levels=levels, bound_lo=self.bound_lo, bound_hi=self.bound_hi
        )


def update_bounds(tracker: BoundsTracker, batch_values: Sequence[float]) -> BoundsTracker:
    """Functional wrapper for ``BoundsTracker.update``."""
    return tracker.update(batch_values)
