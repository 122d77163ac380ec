"""Envs module - Native desk-scale tasks and reward-perturbation wrappers."""

from .base import Env, EnvSpec, StepResult
from .pendulum import Pendulum, pendulum_step, pendulum_energy, wrap_angle, PENDULUM_SPEC
from .pointmass import PointMass, pointmass_step, POINTMASS_SPEC
from .wrappers import (
    NoisyRewardState,
    NoisyRewardWrapper,
    GuidedRewardWrapper,
    noisy_reward,
    guided_reward,
)
from .registry import make_env, ENV_NAMES

__all__ = [
    "Env",
    "EnvSpec",
    "StepResult",
    "Pendulum",
    "pendulum_step",
    "pendulum_energy",
    "wrap_angle",
    "PENDULUM_SPEC",
    "PointMass",
    "pointmass_step",
    "POINTMASS_SPEC",
    "NoisyRewardState",
    "NoisyRewardWrapper",
    "GuidedRewardWrapper",
    "noisy_reward",
    "guided_reward",
    "make_env",
    "ENV_NAMES",
]
