"""Adaptive-moment (Adam-style) optimizer over flat parameter vectors."""

from dataclasses import dataclass, field

import numpy as np
from numpy.typing import ArrayLike

from ..errors import DimensionMismatchError


@dataclass
class OptimizerState:
    """First/second moment accumulators for one flat parameter vector."""
    size: int
    lr: float = 3e-4
    beta1: float = 0.9
    beta2: float = 0.999
    stabilizer: float = 1e-8
    step: int = 0
    m: np.ndarray = field(default=None)
    v: np.ndarray = field(default=None)

    def __post_init__(self):
        if self.m is None:
            self.m = np.zeros(self.size)
        if self.v is None:
            self.v = np.zeros(self.size)

    def copy(self) -> "OptimizerState":
        return OptimizerState(
            size=self.size,
            lr=self.lr,
            beta1=self.beta1,
            beta2=self.beta2,
            stabilizer=self.stabilizer,
            step=self.step,
            m=self.m.copy(),
            v=self.v.copy(),
        )


def apply_update(params: ArrayLike, grad: ArrayLike, opt: OptimizerState) -> np.ndarray:
    """One descent step along ``grad``; mutates ``opt`` and returns new parameters.

    An all-zero gradient is a no-op: parameters, moments and the step count stay put.
    """
    params = np.asarray(params, dtype=float)
    grad = np.asarray(grad, dtype=float)
    if params.shape != grad.shape or params.shape != opt.m.shape:
        raise DimensionMismatchError(
            f"params {params.shape}, grad {grad.shape} and optimizer {opt.m.shape} differ"
        )
    if not np.any(grad):
        return params.copy()

    opt.step += 1
    opt.m = opt.beta1 * opt.m + (1.0 - opt.beta1) * grad
    opt.v = opt.beta2 * opt.v + (1.0 - opt.beta2) * grad**2
    m_hat = opt.m / (1.0 - opt.beta1**opt.step)
    v_hat = opt.v / (1.0 - opt.beta2**opt.step)
    return params - opt.lr * m_hat / (np.sqrt(v_hat) + opt.stabilizer)
