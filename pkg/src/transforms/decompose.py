"""Weight/error decomposition of the learning rules and the raw JS reference form."""

from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike

from ..errors import DecompositionError, OracleDomainError
from ..numerics import log_sigmoid_variance, sigmoid, sigmoid_difference
from .rules import TransformKind, _js_error, _js_weight

# Largest |lambda_O * (x - mu)| at which raw sigmoid ratios stay representable
ORACLE_LIMIT = 30.0


@dataclass
class Decomposition:
    """delta* = weight(sigma_V) * error(delta)."""
    weight: np.ndarray
    error: np.ndarray

    @property
    def product(self) -> np.ndarray:
        return self.weight * self.error


def decompose(
    kind: TransformKind,
    delta: ArrayLike,
    v: ArrayLike,
    mu: float,
    lambda_o: float,
) -> Decomposition:
    """Split a divergence-derived per-level transform into weight and error terms."""
    kind = TransformKind(kind)
    delta = np.asarray(delta, dtype=float)
    x_v = lambda_o * (np.asarray(v, dtype=float) - mu)

    if kind is TransformKind.RKL:
        weight = lambda_o * np.exp(log_sigmoid_variance(x_v))
        return Decomposition(weight=weight * np.ones_like(delta), error=delta * np.ones_like(x_v))
    if kind is TransformKind.FKL:
        error = sigmoid_difference(x_v + lambda_o * delta, x_v)
        return Decomposition(weight=np.ones_like(error), error=error)
    if kind is TransformKind.JS:
        error = _js_error(delta, x_v, lambda_o)
        return Decomposition(weight=_js_weight(x_v, lambda_o) * np.ones_like(error), error=error)
    raise DecompositionError(f"no canonical decomposition for the {kind.value} rule")


def decompose_mixture(delta: ArrayLike, v: ArrayLike, mu: float, lambda_o: float) -> Decomposition:
    """Jeffreys plotting aid: RKL and FKL terms averaged separately.

    The product of the averaged terms is not the Jeffreys transform.
    """
    rkl = decompose(TransformKind.RKL, delta, v, mu, lambda_o)
    fkl = decompose(TransformKind.FKL, delta, v, mu, lambda_o)
    return Decomposition(
        weight=0.5 * (rkl.weight + fkl.weight), error=0.5 * (rkl.error + fkl.error)
    )


def js_direct_oracle(delta: ArrayLike, v: ArrayLike, mu: float, lambda_o: float) -> np.ndarray:
    """JS transform from raw sigmoid log-ratios; reference for the softplus form only.

    -sqrt(s_V * s'_V) * [ln(s_V / (s_V + s_Q)) - ln(s'_V / (s'_V + s'_Q))], with s' = 1 - s.
    """
    delta = np.asarray(delta, dtype=float)
    v = np.asarray(v, dtype=float)
    x_v = lambda_o * (v - mu)
    x_q = lambda_o * (v + delta - mu)
    if np.any(np.abs(x_v) > ORACLE_LIMIT) or np.any(np.abs(x_q) > ORACLE_LIMIT):
        raise OracleDomainError(
            f"oracle domain: |lambda_O (x - mu)| must stay within {ORACLE_LIMIT}"
        )

    s_v, s_q = sigmoid(x_v), sigmoid(x_q)
    c_v, c_q = sigmoid(-x_v), sigmoid(-x_q)
    ratio = np.log(s_v / (s_v + s_q)) - np.log(c_v / (c_v + c_q))
    return -np.sqrt(s_v * c_v) * ratio
