"""Episode interaction loop."""

import logging
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from ..approximator import GaussianPolicy
from ..envs import Env
from .learner import ActorCriticAgent, RoundDiagnostics
from .replay import Transition

logger = logging.getLogger(__name__)


@dataclass
class EpisodeResult:
    """Return seen by the learner, return on the task reward, and update diagnostics."""
    episode_return: float
    task_return: float
    steps: int
    rounds: list[RoundDiagnostics] = field(default_factory=list)

    @property
    def mean_abs_weight(self) -> Optional[float]:
        if not self.rounds:
            return None
        return float(np.mean([r.actor_abs_weight for r in self.rounds]))


def run_episode(
    env: Env,
    agent: ActorCriticAgent,
    env_seed: int,
    rng: np.random.Generator,
    step_cap: Optional[int] = None,
    learn: bool = True,
) -> EpisodeResult:
    """Act until termination, truncation or ``step_cap``, then replay the buffer.

    Transitions are stored with ``done`` set only on termination, so time-limited
    episodes keep bootstrapping.
    """
    cap = env.spec.max_steps if step_cap is None else step_cap
    result = EpisodeResult(episode_return=0.0, task_return=0.0, steps=0)
    if cap <= 0:
        return result

    state = env.reset(env_seed)
    for _ in range(cap):
        action = agent.act(state, rng)
        step = env.step(action)
        if learn:
            agent.buffer.add(
                Transition(state, action, step.reward, step.next_state, step.terminated)
            )
        result.episode_return += step.reward
        result.task_return += step.info.get("task_reward", step.reward)
        result.steps += 1
        state = step.next_state
        if step.done:
            break

    if learn:
        result.rounds = agent.train_rounds(agent.config.updates_per_episode)
    return result


def rollout_greedy(
    env: Env, policy: GaussianPolicy, env_seed: int, step_cap: Optional[int] = None
) -> float:
    """Task return of the deterministic mean-action policy for one episode."""
    spec = env.spec
    cap = spec.max_steps if step_cap is None else step_cap
    total = 0.0
    state = env.reset(env_seed)
    for _ in range(cap):
        step = env.step(policy.mean_action(state, spec.action_low, spec.action_high))
        total += step.info.get("task_reward", step.reward)
        state = step.next_state
        if step.done:
            break
    return total
