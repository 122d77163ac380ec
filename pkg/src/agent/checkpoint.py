"""Agent checkpoint directory: one parameter file per network plus a JSON metadata record."""

import json
import logging
from pathlib import Path
from typing import Any, Union

from ..approximator import load_net, load_policy, save_net, save_policy
from ..errors import CheckpointError
from .learner import ActorCriticAgent

logger = logging.getLogger(__name__)


def save_agent(
    agent: ActorCriticAgent, directory: Union[str, Path], metadata: dict[str, Any]
) -> Path:
    """Write critic{k}.npz, target{k}.npz, policy.npz and metadata.json into ``directory``."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    for k, (critic, target) in enumerate(zip(agent.critics, agent.target_critics)):
        save_net(critic, directory / f"critic{k}.npz")
        save_net(target, directory / f"target{k}.npz")
    save_policy(agent.policy, directory / "policy.npz")

    record = {
        **metadata,
        "env": agent.spec.name,
        "state_dim": agent.spec.state_dim,
        "action_dim": agent.spec.action_dim,
        "ensemble_size": len(agent.critics),
        "optimizer_steps": {
            "critic": [opt.step for opt in agent.critic_opts],
            "actor": agent.actor_opt.step,
        },
        "bounds": {
            "lo": agent.tracker.bound_lo,
            "hi": agent.tracker.bound_hi,
            "initialized": agent.tracker.initialized,
        },
        "agent": agent.config.model_dump(mode="json", by_alias=True),
    }
    (directory / "metadata.json").write_text(
        json.dumps(record, indent=2, sort_keys=True) + "\n", encoding="utf-8"
    )
    logger.info(f"checkpoint written to {directory}")
    return directory


def load_agent_into(agent: ActorCriticAgent, directory: Union[str, Path]) -> dict[str, Any]:
    """Restore network parameters saved by ``save_agent``; returns the metadata record."""
    directory = Path(directory)
    metadata_path = directory / "metadata.json"
    if not metadata_path.exists():
        raise CheckpointError(f"no metadata.json in {directory}")
    metadata = json.loads(metadata_path.read_text(encoding="utf-8"))
    ensemble = metadata.get("ensemble_size")
    if metadata.get("env") != agent.spec.name or ensemble != len(agent.critics):
        raise CheckpointError(f"{directory} does not match this agent's environment or ensemble")

    for k in range(len(agent.critics)):
        agent.critics[k] = load_net(directory / f"critic{k}.npz")
        agent.target_critics[k] = load_net(directory / f"target{k}.npz")
    agent.policy = load_policy(directory / "policy.npz")
    bounds = metadata.get("bounds", {})
    if bounds.get("initialized"):
        agent.tracker.bound_lo = bounds["lo"]
        agent.tracker.bound_hi = bounds["hi"]
        agent.tracker.initialized = True
    return metadata
