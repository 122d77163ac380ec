"""Pendulum swing-up (upright is theta = 0)."""

import math
from dataclasses import dataclass

import numpy as np

from .base import EnvSpec, StepResult

GRAVITY = 10.0
MASS = 1.0
LENGTH = 1.0
DT = 0.05
MAX_TORQUE = 2.0
MAX_SPEED = 8.0
MAX_STEPS = 200

PENDULUM_SPEC = EnvSpec(
    name="pendulum",
    state_dim=3,
    action_dim=1,
    action_low=(-MAX_TORQUE,),
    action_high=(MAX_TORQUE,),
    max_steps=MAX_STEPS,
    dt=DT,
)

# Worst per-step reward: angle pi, speed at the clamp, full torque
MIN_STEP_REWARD = -(math.pi**2 + 0.1 * MAX_SPEED**2 + 0.001 * MAX_TORQUE**2)


def wrap_angle(theta: float) -> float:
    """Map an angle to (-pi, pi]."""
    wrapped = math.fmod(theta + math.pi, 2.0 * math.pi)
    if wrapped <= 0.0:
        wrapped += 2.0 * math.pi
    return wrapped - math.pi


def pendulum_step(
    theta: float, theta_dot: float, torque: float, dt: float = DT
) -> tuple[tuple[float, float], float]:
    """Semi-implicit Euler step; returns ((theta, theta_dot), reward).

    The reward is charged on the pre-step state and the applied torque.
    """
    u = min(max(torque, -MAX_TORQUE), MAX_TORQUE)
    reward = -(wrap_angle(theta) ** 2 + 0.1 * theta_dot**2 + 0.001 * u**2)
    accel = (3.0 * GRAVITY / (2.0 * LENGTH)) * math.sin(theta) + (3.0 / (MASS * LENGTH**2)) * u
    new_theta_dot = min(max(theta_dot + accel * dt, -MAX_SPEED), MAX_SPEED)
    new_theta = theta + new_theta_dot * dt
    return (new_theta, new_theta_dot), reward


def pendulum_energy(theta: float, theta_dot: float) -> float:
    """Conserved quantity of the unforced dynamics."""
    return 0.5 * theta_dot**2 + (3.0 * GRAVITY / (2.0 * LENGTH)) * math.cos(theta)


def observe(theta: float, theta_dot: float) -> np.ndarray:
    return np.array([math.cos(theta), math.sin(theta), theta_dot])


@dataclass
class Pendulum:
    """Stateful wrapper around ``pendulum_step`` with (cos, sin, theta_dot) observations."""
    spec: EnvSpec = PENDULUM_SPEC
    theta: float = math.pi
    theta_dot: float = 0.0
    steps: int = 0

    def reset(self, seed: int) -> np.ndarray:
        rng = np.random.default_rng(seed)
        self.theta = float(rng.uniform(-math.pi, math.pi))
        self.theta_dot = float(rng.uniform(-1.0, 1.0))
        self.steps = 0
        return observe(self.theta, self.theta_dot)

    def step(self, action: np.ndarray) -> StepResult:
        torque = float(np.asarray(action, dtype=float).reshape(-1)[0])
        (self.theta, self.theta_dot), reward = pendulum_step(self.theta, self.theta_dot, torque)
        self.steps += 1
        return StepResult(
            next_state=observe(self.theta, self.theta_dot),
            reward=reward,
            terminated=False,
            truncated=self.steps >= self.spec.max_steps,
        )
