"""Numerically stable scalar primitives.

Every function accepts a float or an array and evaluates elementwise, so callers can
pass single values or whole batches. Nothing here ever forms ``exp`` of a positive
argument, which keeps the results finite over the full float64 range.
"""

import numpy as np
from numpy.typing import ArrayLike


def sigmoid(x: ArrayLike) -> np.ndarray:
    """Logistic function 1 / (1 + exp(-x)).

    May return exactly 0.0 or 1.0 once |x| exceeds ~745; use the log-domain helpers
    when ratios of sigmoids are needed.
    """
    x = np.asarray(x, dtype=float)
    e = np.exp(-np.abs(x))  # in (0, 1], never overflows
    return np.where(x >= 0, 1.0 / (1.0 + e), e / (1.0 + e))


def softplus(x: ArrayLike) -> np.ndarray:
    """ln(1 + exp(x)) as max(x, 0) + ln(1 + exp(-|x|))."""
    x = np.asarray(x, dtype=float)
    return np.maximum(x, 0.0) + np.log1p(np.exp(-np.abs(x)))


def log_sigmoid(x: ArrayLike) -> np.ndarray:
    """ln sigmoid(x) = -softplus(-x)."""
    return -softplus(-np.asarray(x, dtype=float))


def log_sigmoid_variance(x: ArrayLike) -> np.ndarray:
    """ln(sigmoid(x) * sigmoid(-x)), finite for any finite x."""
    x = np.asarray(x, dtype=float)
    return log_sigmoid(x) + log_sigmoid(-x)


def sigmoid_difference(a: ArrayLike, b: ArrayLike) -> np.ndarray:
    """sigmoid(a) - sigmoid(b) without cancellation in the upper tail.

    When both arguments sit on the positive side the difference is taken between the
    complementary tails, sigmoid(-b) - sigmoid(-a), which are small and exact.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    upper = (a + b) > 0
    return np.where(upper, sigmoid(-b) - sigmoid(-a), sigmoid(a) - sigmoid(b))
