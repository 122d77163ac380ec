"""Level geometry of the pseudo-quantized optimality model."""

from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike

from ..numerics import sigmoid


@dataclass(frozen=True)
class OptimalityConfig:
    """Sharpness, level count and value bounds for one batch of transforms."""
    sharpness: float  # lambda > 0
    levels: int  # L >= 1
    bound_lo: float
    bound_hi: float

    def __post_init__(self):
        if not self.sharpness > 0:
            raise ValueError(f"sharpness must be positive, got {self.sharpness}")
        if self.levels < 1:
            raise ValueError(f"levels must be >= 1, got {self.levels}")
        if not self.bound_hi > self.bound_lo:
            raise ValueError(
                f"bound_hi ({self.bound_hi}) must exceed bound_lo ({self.bound_lo})"
            )

    @property
    def span(self) -> float:
        return self.bound_hi - self.bound_lo

    @property
    def midpoint(self) -> float:
        return 0.5 * (self.bound_hi + self.bound_lo)


def level_centers(cfg: OptimalityConfig) -> list[float]:
    """Evenly spaced centers B_lo + (B_hi - B_lo) * l / (L + 1), l = 1..L."""
    gap = cfg.span / (cfg.levels + 1)
    return [cfg.bound_lo + gap * level for level in range(1, cfg.levels + 1)]


def sharpness_scale(cfg: OptimalityConfig) -> float:
    """lambda_O = lambda * (L + 1) / (B_hi - B_lo)."""
    return cfg.sharpness * (cfg.levels + 1) / cfg.span


def optimality_prob(v: ArrayLike, mu: float, lambda_o: float) -> np.ndarray:
    """p(O=1 | V) = sigmoid(lambda_O * (V - mu))."""
    return sigmoid(lambda_o * (np.asarray(v, dtype=float) - mu))
