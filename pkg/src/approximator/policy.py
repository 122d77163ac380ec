"""Diagonal-Gaussian policy over an MLP mean."""

import math
from dataclasses import dataclass
from typing import Optional, Union

import numpy as np
from numpy.typing import ArrayLike

from ..errors import DimensionMismatchError
from .mlp import Mlp

LOG_STD_MIN = math.log(1e-3)
LOG_STD_MAX = math.log(10.0)
HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)

# Union[int, Generator]: callers may pass a seed or an already-running generator
RngLike = Union[int, np.random.Generator]


@dataclass
class GaussianPolicy:
    """pi(a | s) = N(mean_net(s), diag(exp(log_std))^2).

    Flat parameters are the mean network's parameters followed by ``log_std``.
    """
    mean_net: Mlp
    log_std: np.ndarray

    def __post_init__(self):
        self.log_std = np.asarray(self.log_std, dtype=float)
        if self.log_std.shape != (self.mean_net.n_out,):
            raise DimensionMismatchError(
                f"log_std has shape {self.log_std.shape}, mean net emits {self.mean_net.n_out}"
            )

    @classmethod
    def init(
        cls,
        state_dim: int,
        action_dim: int,
        hidden: tuple[int, ...],
        seed: int,
        init_log_std: float = -0.5,
    ) -> "GaussianPolicy":
        net = Mlp.init([state_dim, *hidden, action_dim], seed)
        return cls(mean_net=net, log_std=np.full(action_dim, init_log_std))

    @property
    def action_dim(self) -> int:
        return self.mean_net.n_out

    @property
    def param_count(self) -> int:
        return self.mean_net.param_count + self.action_dim

    @property
    def clamped_log_std(self) -> np.ndarray:
        return np.clip(self.log_std, LOG_STD_MIN, LOG_STD_MAX)

    @property
    def std(self) -> np.ndarray:
        return np.exp(self.clamped_log_std)

    def get_params(self) -> np.ndarray:
        return np.concatenate([self.mean_net.get_params(), self.log_std])

    def set_params(self, flat: ArrayLike) -> None:
        flat = np.asarray(flat, dtype=float)
        if flat.shape != (self.param_count,):
            raise DimensionMismatchError(
                f"expected {self.param_count} parameters, got shape {flat.shape}"
            )
        split = self.mean_net.param_count
        self.mean_net.set_params(flat[:split])
        self.log_std = flat[split:].copy()

    def copy(self) -> "GaussianPolicy":
        return GaussianPolicy(mean_net=self.mean_net.copy(), log_std=self.log_std.copy())

    def _check_actions(self, actions: ArrayLike, batch: int) -> np.ndarray:
        a = np.atleast_2d(np.asarray(actions, dtype=float))
        if a.shape != (batch, self.action_dim):
            raise DimensionMismatchError(
                f"actions have shape {np.shape(actions)}, policy emits {self.action_dim}"
            )
        return a

    def log_prob(self, states: ArrayLike, actions: ArrayLike) -> np.ndarray:
        """Log density; a scalar for one (state, action) pair, shape (B,) for a batch."""
        single = np.asarray(states).ndim == 1
        mean = np.atleast_2d(self.mean_net.forward(states))
        a = self._check_actions(actions, mean.shape[0])
        log_std = self.clamped_log_std
        z = (a - mean) / np.exp(log_std)
        out = np.sum(-0.5 * z**2 - log_std - HALF_LOG_2PI, axis=1)
        return out[0] if single else out

    def score_vjp(self, states: ArrayLike, actions: ArrayLike, weights: ArrayLike) -> np.ndarray:
        """Flat gradient of sum_b weights[b] * ln pi(actions[b] | states[b])."""
        s = np.atleast_2d(np.asarray(states, dtype=float))
        mean = np.atleast_2d(self.mean_net.forward(s))
        a = self._check_actions(actions, mean.shape[0])
        w = np.asarray(weights, dtype=float).reshape(-1, 1)
        var = np.exp(2.0 * self.clamped_log_std)

        mean_grad = self.mean_net.vjp(s, w * (a - mean) / var)
        inside = (self.log_std > LOG_STD_MIN) & (self.log_std < LOG_STD_MAX)
        log_std_grad = np.sum(w * ((a - mean) ** 2 / var - 1.0), axis=0) * inside
        return np.concatenate([mean_grad, log_std_grad])

    def log_prob_grad(self, state: ArrayLike, action: ArrayLike) -> np.ndarray:
        """Gradient of ln pi(action | state) w.r.t. the flat parameters."""
        return self.score_vjp(np.asarray(state)[None, :], np.asarray(action)[None, :], [1.0])

    def mean_action(
        self,
        state: ArrayLike,
        low: Optional[ArrayLike] = None,
        high: Optional[ArrayLike] = None,
    ) -> np.ndarray:
        mean = self.mean_net.forward(state)
        if low is not None and high is not None:
            mean = np.clip(mean, low, high)
        return mean

    def sample(
        self,
        state: ArrayLike,
        rng: RngLike,
        low: Optional[ArrayLike] = None,
        high: Optional[ArrayLike] = None,
    ) -> np.ndarray:
        """mean + std * N(0, I), clamped to [low, high] when a box is given."""
        if not isinstance(rng, np.random.Generator):
            rng = np.random.default_rng(rng)
        mean = self.mean_net.forward(state)
        action = mean + self.std * rng.standard_normal(mean.shape)
        if low is not None and high is not None:
            action = np.clip(action, low, high)
        return action


def log_prob(policy: GaussianPolicy, state: ArrayLike, action: ArrayLike) -> float:
    return float(policy.log_prob(state, action))


def log_prob_grad(policy: GaussianPolicy, state: ArrayLike, action: ArrayLike) -> np.ndarray:
    return policy.log_prob_grad(state, action)


def sample_action(
    policy: GaussianPolicy,
    state: ArrayLike,
    rng: RngLike,
    low: Optional[ArrayLike] = None,
    high: Optional[ArrayLike] = None,
) -> np.ndarray:
    return policy.sample(state, rng, low, high)


def mean_action(
    policy: GaussianPolicy,
    state: ArrayLike,
    low: Optional[ArrayLike] = None,
    high: Optional[ArrayLike] = None,
) -> np.ndarray:
    return policy.mean_action(state, low, high)
