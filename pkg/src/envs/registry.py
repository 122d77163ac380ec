"""Environment factory keyed by name, with optional reward wrappers."""

import logging
from pathlib import Path
from typing import Callable, Optional, Union

from ..approximator import load_policy
from .base import Env
from .pendulum import Pendulum
from .pointmass import PointMass
from .wrappers import GuidedRewardWrapper, NoisyRewardWrapper

logger = logging.getLogger(__name__)

_FACTORIES: dict[str, Callable[[], Env]] = {
    "pendulum": Pendulum,
    "pointmass": PointMass,
}
ENV_NAMES = tuple(_FACTORIES)


def make_env(
    name: str,
    noisy_reward: bool = False,
    freeze_variance: bool = False,
    guided_expert: Optional[Union[str, Path]] = None,
    wrapper_seed: int = 0,
) -> Env:
    """Build ``name`` and stack the requested wrappers (guided first, then noisy)."""
    try:
        env = _FACTORIES[name]()
    except KeyError:
        choices = ", ".join(ENV_NAMES)
        raise ValueError(f"unknown environment {name!r}; choose from {choices}") from None

    if guided_expert is not None:
        expert_path = Path(guided_expert)
        if expert_path.is_dir():
            expert_path = expert_path / "policy.npz"
        expert = load_policy(expert_path)
        env = GuidedRewardWrapper(env, expert, seed=wrapper_seed)
        logger.info(f"{name}: guided reward from expert {guided_expert}")
    if noisy_reward:
        env = NoisyRewardWrapper(env, seed=wrapper_seed + 1, freeze_variance=freeze_variance)
        logger.info(f"{name}: noisy reward wrapper enabled")
    return env
