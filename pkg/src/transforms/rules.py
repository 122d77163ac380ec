"""Nonlinear TD-error transforms derived from the sigmoid optimality model.

Each rule maps a raw TD error ``delta`` and the value estimate ``v`` (so that the
one-sample action value is ``q = v + delta``) to the weight that multiplies both the
critic gradient and the policy score. All branches are elementwise over numpy arrays.
"""

from enum import Enum

import numpy as np
from numpy.typing import ArrayLike

from ..numerics import log_sigmoid_variance, sigmoid_difference, softplus
from ..optimality import OptimalityConfig, level_centers, sharpness_scale


class TransformKind(str, Enum):
    """Learning rule applied to the TD error."""
    LINEAR = "linear"  # classical actor-critic
    RKL = "rkl"  # reverse KL
    FKL = "fkl"  # forward KL
    JEFFREYS = "jeffreys"  # mean of RKL and FKL
    JS = "js"  # Jensen-Shannon, modified sqrt alignment


def _rkl(delta: np.ndarray, x_v: np.ndarray, lambda_o: float) -> np.ndarray:
    # lambda_O * sigma_V * (1 - sigma_V) * delta
    return lambda_o * np.exp(log_sigmoid_variance(x_v)) * delta


def _fkl(delta: np.ndarray, x_v: np.ndarray, lambda_o: float) -> np.ndarray:
    # sigma_Q - sigma_V
    return sigmoid_difference(x_v + lambda_o * delta, x_v)


def _js_error(delta: np.ndarray, x_v: np.ndarray, lambda_o: float) -> np.ndarray:
    """delta + lambda_O^-1 * (sp(D - lambda_O * delta) - sp(D)), D = sp(x_Q) - sp(x_V)."""
    scaled = lambda_o * delta
    gap = softplus(x_v + scaled) - softplus(x_v)
    return delta + (softplus(gap - scaled) - softplus(gap)) / lambda_o


def _js_weight(x_v: np.ndarray, lambda_o: float) -> np.ndarray:
    # lambda_O * sqrt(sigma_V * (1 - sigma_V))
    return lambda_o * np.exp(0.5 * log_sigmoid_variance(x_v))


def transform_level(
    kind: TransformKind,
    delta: ArrayLike,
    v: ArrayLike,
    mu: float,
    lambda_o: float,
) -> np.ndarray:
    """Transformed TD error for a single optimality level centered at ``mu``."""
    kind = TransformKind(kind)
    delta = np.asarray(delta, dtype=float)
    if kind is TransformKind.LINEAR:
        return delta
    if not lambda_o > 0:
        raise ValueError(f"lambda_o must be positive, got {lambda_o}")

    x_v = lambda_o * (np.asarray(v, dtype=float) - mu)
    if kind is TransformKind.RKL:
        return _rkl(delta, x_v, lambda_o)
    if kind is TransformKind.FKL:
        return _fkl(delta, x_v, lambda_o)
    if kind is TransformKind.JEFFREYS:
        return 0.5 * (_rkl(delta, x_v, lambda_o) + _fkl(delta, x_v, lambda_o))
    return _js_weight(x_v, lambda_o) * _js_error(delta, x_v, lambda_o)


def level_transforms(
    kind: TransformKind, delta: ArrayLike, v: ArrayLike, cfg: OptimalityConfig
) -> list[np.ndarray]:
    """The L per-level summands of ``transform``, ordered by level."""
    lambda_o = sharpness_scale(cfg)
    return [transform_level(kind, delta, v, mu, lambda_o) for mu in level_centers(cfg)]


def transform(
    kind: TransformKind, delta: ArrayLike, v: ArrayLike, cfg: OptimalityConfig
) -> np.ndarray:
    """Quantization-summed transform (1/L) * sum_l transform_level(..., mu_l, lambda_O)."""
    kind = TransformKind(kind)
    if kind is TransformKind.LINEAR:
        return np.asarray(delta, dtype=float)
    return sum(level_transforms(kind, delta, v, cfg)) / cfg.levels
