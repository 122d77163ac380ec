"""Environment contract shared by the native tasks and wrappers."""

from dataclasses import dataclass, field
from typing import Any, Protocol

import numpy as np


@dataclass(frozen=True)
class EnvSpec:
    """Static description of an environment."""
    name: str
    state_dim: int
    action_dim: int
    action_low: tuple[float, ...]
    action_high: tuple[float, ...]
    max_steps: int
    dt: float

    def __post_init__(self):
        if len(self.action_low) != self.action_dim or len(self.action_high) != self.action_dim:
            raise ValueError(f"{self.name}: action box does not match action_dim")
        if any(lo >= hi for lo, hi in zip(self.action_low, self.action_high)):
            raise ValueError(f"{self.name}: action_low must be below action_high")
        if self.max_steps <= 0:
            raise ValueError(f"{self.name}: max_steps must be positive")

    def clip_action(self, action: np.ndarray) -> np.ndarray:
        return np.clip(np.asarray(action, dtype=float), self.action_low, self.action_high)


@dataclass
class StepResult:
    """Outcome of one environment step.

    ``terminated`` ends the episode with a zero bootstrap; ``truncated`` is the time limit.
    """
    next_state: np.ndarray
    reward: float
    terminated: bool
    truncated: bool
    info: dict[str, Any] = field(default_factory=dict)

    @property
    def done(self) -> bool:
        return self.terminated or self.truncated


# Protocol: structural interface, any object with these members is an Env
class Env(Protocol):
    spec: EnvSpec

    def reset(self, seed: int) -> np.ndarray: ...

    def step(self, action: np.ndarray) -> StepResult: ...
