"""Deterministic split of one run seed into independent streams."""

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class SeedBundle:
    """Seeds for each source of randomness in a run."""
    env: int  # training episode i resets with env + i
    policy_init: int  # critic/policy weight initialization
    buffer: int  # replay sampling
    action: int  # exploration noise
    eval: int  # evaluation episode k resets with eval + k


def split_seed(seed: int) -> SeedBundle:
    """SeedSequence(seed).spawn(5), each child reduced to one 32-bit integer."""
    children = np.random.SeedSequence(seed).spawn(5)
    env, policy_init, buffer, action, evaluation = (
        int(child.generate_state(1)[0]) for child in children
    )
    return SeedBundle(
        env=env, policy_init=policy_init, buffer=buffer, action=action, eval=evaluation
    )
