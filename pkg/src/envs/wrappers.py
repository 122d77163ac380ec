"""Reward-perturbation wrappers: smoothed noisy reward and expert-guided imitation reward."""

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np
from numpy.typing import ArrayLike

from ..approximator import GaussianPolicy
from ..errors import DimensionMismatchError
from .base import Env, EnvSpec, StepResult

# Variance and mean decays: 1/100 of the weight left after 50 and 5 steps
VARIANCE_DECAY = (1.0 / 100.0) ** (1.0 / 50.0)
MEAN_DECAY = (1.0 / 100.0) ** (1.0 / 5.0)


@dataclass
class NoisyRewardState:
    """Running reward statistics; both start at zero."""
    mu_r: float = 0.0
    var_r: float = 0.0
    decay_var: float = VARIANCE_DECAY
    decay_mean: float = MEAN_DECAY
    freeze_variance: bool = False  # smoothing-only mode: var_r stays at zero


def noisy_reward(
    state: NoisyRewardState, raw_r: float, rng: np.random.Generator
) -> tuple[float, NoisyRewardState]:
    """Replace ``raw_r`` by a draw from N(mu_r, sqrt(var_r)) after updating the statistics.

    Order: variance (against the previous mean), then mean, then the draw.
    """
    c, d = state.decay_var, state.decay_mean
    var_r = state.var_r
    if not state.freeze_variance:
        var_r = c * var_r + c * (1.0 - c) * (state.mu_r - raw_r) ** 2
    mu_r = d * state.mu_r + (1.0 - d) * raw_r
    updated = NoisyRewardState(
        mu_r=mu_r,
        var_r=max(var_r, 0.0),
        decay_var=c,
        decay_mean=d,
        freeze_variance=state.freeze_variance,
    )
    sample = float(rng.normal(mu_r, math.sqrt(updated.var_r)))
    return sample, updated


def guided_reward(expert_action: ArrayLike, agent_action: ArrayLike) -> float:
    """|A|^-1 * sum_i exp(-|a_i^exp - a_i|), in (0, 1]."""
    expert = np.asarray(expert_action, dtype=float).ravel()
    agent = np.asarray(agent_action, dtype=float).ravel()
    if expert.shape != agent.shape:
        raise DimensionMismatchError(
            f"expert action has {expert.size} dims, agent action has {agent.size}"
        )
    return float(np.mean(np.exp(-np.abs(expert - agent))))


@dataclass
class NoisyRewardWrapper:
    """Env whose rewards are passed through ``noisy_reward``."""
    env: Env
    seed: int = 0
    freeze_variance: bool = False
    reward_state: NoisyRewardState = field(init=False)
    rng: np.random.Generator = field(init=False)

    def __post_init__(self):
        self.rng = np.random.default_rng(self.seed)
        self.reward_state = NoisyRewardState(freeze_variance=self.freeze_variance)

    @property
    def spec(self) -> EnvSpec:
        return self.env.spec

    def reset(self, seed: int) -> np.ndarray:
        # Statistics persist across episodes; only the wrapped task is reset
        return self.env.reset(seed)

    def step(self, action: np.ndarray) -> StepResult:
        result = self.env.step(action)
        result.info.setdefault("task_reward", result.reward)
        result.reward, self.reward_state = noisy_reward(self.reward_state, result.reward, self.rng)
        return result


@dataclass
class GuidedRewardWrapper:
    """Env whose reward is the imitation reward against a sampled expert action."""
    env: Env
    expert: GaussianPolicy
    seed: int = 0
    rng: np.random.Generator = field(init=False)
    _state: Optional[np.ndarray] = field(init=False, default=None)

    def __post_init__(self):
        self.rng = np.random.default_rng(self.seed)
        if self.expert.action_dim != self.env.spec.action_dim:
            raise DimensionMismatchError("expert policy and environment action sizes differ")

    @property
    def spec(self) -> EnvSpec:
        return self.env.spec

    def reset(self, seed: int) -> np.ndarray:
        self._state = self.env.reset(seed)
        return self._state

    def step(self, action: np.ndarray) -> StepResult:
        spec = self.env.spec
        expert_action = self.expert.sample(self._state, self.rng, spec.action_low, spec.action_high)
        result = self.env.step(action)
        result.info.setdefault("task_reward", result.reward)
        result.reward = guided_reward(expert_action, spec.clip_action(action))
        self._state = result.next_state
        return result
