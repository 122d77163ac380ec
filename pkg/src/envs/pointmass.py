"""Planar point mass driven to a fixed goal (double integrator)."""

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .base import EnvSpec, StepResult

DT = 0.1
MAX_ACCEL = 1.0
MAX_STEPS = 100
GOAL = (0.0, 0.0)
GOAL_RADIUS = 0.05
ACCEL_COST = 0.01

POINTMASS_SPEC = EnvSpec(
    name="pointmass",
    state_dim=4,
    action_dim=2,
    action_low=(-MAX_ACCEL, -MAX_ACCEL),
    action_high=(MAX_ACCEL, MAX_ACCEL),
    max_steps=MAX_STEPS,
    dt=DT,
)


def pointmass_step(
    state: np.ndarray, accel: np.ndarray, goal: tuple[float, float] = GOAL, dt: float = DT
) -> tuple[np.ndarray, float, bool]:
    """Semi-implicit Euler step; returns (next_state, reward, reached_goal).

    The reward is charged on the post-step distance and the applied acceleration.
    """
    x, y, vx, vy = np.asarray(state, dtype=float)
    ax, ay = np.clip(np.asarray(accel, dtype=float), -MAX_ACCEL, MAX_ACCEL)
    vx, vy = vx + ax * dt, vy + ay * dt
    x, y = x + vx * dt, y + vy * dt
    distance = math.hypot(x - goal[0], y - goal[1])
    reward = -distance - ACCEL_COST * (ax**2 + ay**2)
    return np.array([x, y, vx, vy]), reward, distance <= GOAL_RADIUS


@dataclass
class PointMass:
    """Starts at rest from a uniform position in [-1, 1]^2."""
    spec: EnvSpec = POINTMASS_SPEC
    state: Optional[np.ndarray] = None
    steps: int = 0

    def reset(self, seed: int) -> np.ndarray:
        rng = np.random.default_rng(seed)
        self.state = np.concatenate([rng.uniform(-1.0, 1.0, size=2), np.zeros(2)])
        self.steps = 0
        return self.state.copy()

    def step(self, action: np.ndarray) -> StepResult:
        self.state, reward, reached = pointmass_step(self.state, action)
        self.steps += 1
        return StepResult(
            next_state=self.state.copy(),
            reward=reward,
            terminated=reached,
            truncated=(not reached) and self.steps >= self.spec.max_steps,
        )
