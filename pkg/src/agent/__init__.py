"""Agent module - Replay, ensemble critics, Polyak targets and the PQAC update rules."""

from ..config import AgentConfig
from .replay import Transition, Batch, ReplayBuffer
from .learner import (
    ActorCriticAgent,
    BatchEvaluation,
    RoundDiagnostics,
    TDTarget,
    td_target,
    polyak_update,
)
from .rollout import EpisodeResult, run_episode, rollout_greedy
from .checkpoint import save_agent, load_agent_into

__all__ = [
    "AgentConfig",
    "Transition",
    "Batch",
    "ReplayBuffer",
    "ActorCriticAgent",
    "BatchEvaluation",
    "RoundDiagnostics",
    "TDTarget",
    "td_target",
    "polyak_update",
    "EpisodeResult",
    "run_episode",
    "rollout_greedy",
    "save_agent",
    "load_agent_into",
]
