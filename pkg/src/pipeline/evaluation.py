"""Policy evaluation with the interquartile mean of episode returns."""

import json
import logging
from pathlib import Path
from typing import Sequence, Union

import numpy as np

from ..agent import rollout_greedy
from ..approximator import GaussianPolicy, load_policy
from ..envs import Env, make_env
from ..errors import CheckpointError, DegenerateBatchError
from .decorators import log_execution

logger = logging.getLogger(__name__)


def interquartile_mean(values: Sequence[float]) -> float:
    """Mean after dropping floor(n/4) values from each end of the sorted returns."""
    data = np.sort(np.asarray(values, dtype=float))
    if data.size == 0:
        raise DegenerateBatchError("degenerate batch: no returns to average")
    cut = data.size // 4
    return float(np.mean(data[cut:data.size - cut]))


def evaluate_policy(
    env: Env, policy: GaussianPolicy, episodes: int, base_seed: int
) -> list[float]:
    """Task returns of the mean-action policy, episode k reset with ``base_seed + k``."""
    return [rollout_greedy(env, policy, base_seed + k) for k in range(episodes)]


def load_checkpoint_policy(checkpoint: Union[str, Path], env: Env) -> GaussianPolicy:
    """Policy from a checkpoint directory (or a bare policy file) checked against ``env``."""
    path = Path(checkpoint)
    policy_path = path / "policy.npz" if path.is_dir() else path
    metadata_path = policy_path.parent / "metadata.json"
    if metadata_path.exists():
        metadata = json.loads(metadata_path.read_text(encoding="utf-8"))
        trained_on = metadata.get("env")
        if trained_on is not None and trained_on != env.spec.name:
            raise CheckpointError(
                f"checkpoint was trained on {trained_on!r}, not {env.spec.name!r}"
            )

    policy = load_policy(policy_path)
    if policy.mean_net.n_in != env.spec.state_dim or policy.action_dim != env.spec.action_dim:
        raise CheckpointError(
            f"checkpoint maps {policy.mean_net.n_in} -> {policy.action_dim}, "
            f"{env.spec.name} needs {env.spec.state_dim} -> {env.spec.action_dim}"
        )
    return policy


@log_execution
def run_eval(checkpoint: Union[str, Path], env_name: str, episodes: int, seed: int) -> float:
    """Interquartile-mean task return of a checkpointed policy."""
    env = make_env(env_name)
    policy = load_checkpoint_policy(checkpoint, env)
    returns = evaluate_policy(env, policy, episodes, seed)
    score = interquartile_mean(returns)
    logger.info(f"{env_name}: {episodes} episodes, interquartile mean {score:.4f}")
    return score
