"""Actor-critic learner: ensemble critics with median targets, Polyak targets and
TD-error transforms shared by the critic and actor updates."""

import logging
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np
from numpy.typing import ArrayLike

from ..approximator import GaussianPolicy, Mlp, OptimizerState, apply_update
from ..config import AgentConfig
from ..envs import EnvSpec
from ..errors import DimensionMismatchError
from ..optimality import BoundsTracker, OptimalityConfig
from ..transforms import TransformKind, transform
from .replay import Batch, ReplayBuffer

logger = logging.getLogger(__name__)


@dataclass
class TDTarget:
    """Median bootstrap V(s') (zero at termination) and Q = c * r + gamma * V' * (1 - done).

    ``c`` is the reward scale; values, bounds and TD errors are all in scaled units.
    """
    next_value: np.ndarray
    q: np.ndarray


@dataclass
class BatchEvaluation:
    """Everything one update round reads before any parameter moves."""
    values: np.ndarray  # (ensemble, batch) V_k(s)
    median_value: np.ndarray  # (batch,)
    target: TDTarget
    optimality: OptimalityConfig


@dataclass
class RoundDiagnostics:
    critic_abs_weight: list[float]
    actor_abs_weight: float
    bound_lo: float
    bound_hi: float


def td_target(
    batch: Batch, target_critics: Sequence[Mlp], gamma: float, reward_scale: float = 1.0
) -> TDTarget:
    """Bootstrap target from the median of the (frozen) target critics at s'."""
    evaluations = np.stack([net.forward(batch.next_states)[:, 0] for net in target_critics])
    next_value = np.median(evaluations, axis=0)
    next_value = np.where(batch.dones > 0, 0.0, next_value)
    q = reward_scale * batch.rewards + gamma * next_value * (1.0 - batch.dones)
    return TDTarget(next_value=next_value, q=q)


def polyak_update(main_params: ArrayLike, target_params: ArrayLike, tau: float) -> np.ndarray:
    """target <- (1 - tau) * target + tau * main."""
    main = np.asarray(main_params, dtype=float)
    target = np.asarray(target_params, dtype=float)
    if main.shape != target.shape:
        raise DimensionMismatchError(f"main {main.shape} and target {target.shape} differ")
    return (1.0 - tau) * target + tau * main


@dataclass
class ActorCriticAgent:
    """Owns every piece of mutable learning state for one seed."""
    config: AgentConfig
    spec: EnvSpec
    init_seed: int = 0
    buffer_seed: int = 0
    critics: list[Mlp] = field(init=False)
    target_critics: list[Mlp] = field(init=False)
    policy: GaussianPolicy = field(init=False)
    buffer: ReplayBuffer = field(init=False)
    tracker: BoundsTracker = field(init=False)
    last_weights: dict[str, np.ndarray] = field(init=False, default_factory=dict)

    def __post_init__(self):
        cfg = self.config
        hidden = tuple(cfg.hidden)
        seeds = np.random.SeedSequence(self.init_seed).generate_state(cfg.ensemble_size + 1)
        sizes = [self.spec.state_dim, *hidden, 1]
        self.critics = [Mlp.init(sizes, int(s)) for s in seeds[:-1]]
        self.target_critics = [critic.copy() for critic in self.critics]
        self.policy = GaussianPolicy.init(
            self.spec.state_dim, self.spec.action_dim, hidden, int(seeds[-1]), cfg.init_log_std
        )
        self.critic_opts = [
            OptimizerState(size=c.param_count, lr=cfg.critic_lr) for c in self.critics
        ]
        self.actor_opt = OptimizerState(size=self.policy.param_count, lr=cfg.actor_lr)
        self.buffer = ReplayBuffer(
            cfg.buffer_capacity, self.spec.state_dim, self.spec.action_dim, seed=self.buffer_seed
        )
        self.tracker = BoundsTracker(
            epsilon=cfg.optimality.epsilon, horizon=cfg.optimality.horizon
        )

    @property
    def kind(self) -> TransformKind:
        return TransformKind(self.config.transform_kind)

    # Acting

    def act(self, state: ArrayLike, rng: np.random.Generator) -> np.ndarray:
        return self.policy.sample(state, rng, self.spec.action_low, self.spec.action_high)

    def act_greedy(self, state: ArrayLike) -> np.ndarray:
        return self.policy.mean_action(state, self.spec.action_low, self.spec.action_high)

    # Learning

    def evaluate(self, batch: Batch) -> BatchEvaluation:
        """Refresh the value bounds from median V(s), then compute the shared TD target."""
        values = np.stack([critic.forward(batch.states)[:, 0] for critic in self.critics])
        median_value = np.median(values, axis=0)
        self.tracker.update(median_value)
        opt = self.config.optimality
        return BatchEvaluation(
            values=values,
            median_value=median_value,
            target=td_target(
                batch, self.target_critics, self.config.gamma, self.config.reward_scale
            ),
            optimality=self.tracker.to_config(opt.sharpness, opt.levels),
        )

    def critic_update(
        self, batch: Batch, critic_index: int, evaluation: Optional[BatchEvaluation] = None
    ) -> float:
        """One optimizer step of critic ``critic_index`` on its own TD errors.

        The error is q - V_k(s) for this member; the transform reads the median V(s).
        """
        if evaluation is None:
            evaluation = self.evaluate(batch)
        critic = self.critics[critic_index]
        delta = evaluation.target.q - evaluation.values[critic_index]
        weights = transform(self.kind, delta, evaluation.median_value, evaluation.optimality)
        grad = -critic.vjp(batch.states, weights[:, None]) / len(batch)
        critic.set_params(apply_update(critic.get_params(), grad, self.critic_opts[critic_index]))
        self.last_weights[f"critic{critic_index}"] = weights
        return float(np.mean(np.abs(weights)))

    def actor_update(self, batch: Batch, evaluation: Optional[BatchEvaluation] = None) -> float:
        """One optimizer step of the policy, weighted by the median-critic transform."""
        if evaluation is None:
            evaluation = self.evaluate(batch)
        delta = evaluation.target.q - evaluation.median_value
        weights = transform(self.kind, delta, evaluation.median_value, evaluation.optimality)
        grad = -self.policy.score_vjp(batch.states, batch.actions, weights) / len(batch)
        self.policy.set_params(apply_update(self.policy.get_params(), grad, self.actor_opt))
        self.last_weights["actor"] = weights
        return float(np.mean(np.abs(weights)))

    def sync_targets(self) -> None:
        for critic, target in zip(self.critics, self.target_critics):
            target.set_params(
                polyak_update(critic.get_params(), target.get_params(), self.config.polyak_tau)
            )

    def update_round(self, batch: Batch) -> RoundDiagnostics:
        """Bounds -> every critic -> actor -> Polyak, all against one frozen evaluation."""
        evaluation = self.evaluate(batch)
        critic_diag = [
            self.critic_update(batch, k, evaluation) for k in range(len(self.critics))
        ]
        actor_diag = self.actor_update(batch, evaluation)
        self.sync_targets()
        return RoundDiagnostics(
            critic_abs_weight=critic_diag,
            actor_abs_weight=actor_diag,
            bound_lo=self.tracker.bound_lo,
            bound_hi=self.tracker.bound_hi,
        )

    def train_rounds(self, rounds: int) -> list[RoundDiagnostics]:
        """Replay ``rounds`` batches; skipped until the buffer holds one full batch."""
        if len(self.buffer) < self.config.batch_size:
            logger.debug(f"buffer holds {len(self.buffer)} transitions, waiting for a full batch")
            return []
        return [
            self.update_round(self.buffer.sample(self.config.batch_size)) for _ in range(rounds)
        ]
