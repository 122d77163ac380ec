"""Transitions and a ring-buffer replay memory."""

from dataclasses import dataclass, field

import numpy as np

from ..errors import DegenerateBatchError, DimensionMismatchError


@dataclass
class Transition:
    """(s, a, r, s', done); ``done`` marks termination only, never a time limit."""
    state: np.ndarray
    action: np.ndarray
    reward: float
    next_state: np.ndarray
    done: bool


@dataclass
class Batch:
    """Stacked transitions, one row per sample."""
    states: np.ndarray
    actions: np.ndarray
    rewards: np.ndarray
    next_states: np.ndarray
    dones: np.ndarray  # float 0/1

    def __len__(self) -> int:
        return self.rewards.shape[0]

    @classmethod
    def from_transitions(cls, transitions: list[Transition]) -> "Batch":
        if not transitions:
            raise DegenerateBatchError("degenerate batch: no transitions")
        return cls(
            states=np.stack([np.asarray(t.state, dtype=float) for t in transitions]),
            actions=np.stack([np.asarray(t.action, dtype=float) for t in transitions]),
            rewards=np.array([t.reward for t in transitions], dtype=float),
            next_states=np.stack([np.asarray(t.next_state, dtype=float) for t in transitions]),
            dones=np.array([float(t.done) for t in transitions]),
        )


@dataclass
class ReplayBuffer:
    """Fixed-capacity FIFO memory with seeded uniform sampling."""
    capacity: int
    state_dim: int
    action_dim: int
    seed: int = 0
    size: int = field(init=False, default=0)
    _cursor: int = field(init=False, default=0, repr=False)

    def __post_init__(self):
        if self.capacity < 1:
            raise ValueError(f"capacity must be positive, got {self.capacity}")
        self.rng = np.random.default_rng(self.seed)
        self._states = np.zeros((self.capacity, self.state_dim))
        self._actions = np.zeros((self.capacity, self.action_dim))
        self._rewards = np.zeros(self.capacity)
        self._next_states = np.zeros((self.capacity, self.state_dim))
        self._dones = np.zeros(self.capacity)

    def __len__(self) -> int:
        return self.size

    def add(self, transition: Transition) -> None:
        state = np.asarray(transition.state, dtype=float)
        action = np.asarray(transition.action, dtype=float)
        next_state = np.asarray(transition.next_state, dtype=float)
        if state.shape != (self.state_dim,) or next_state.shape != (self.state_dim,):
            raise DimensionMismatchError(f"state must have {self.state_dim} entries")
        if action.shape != (self.action_dim,):
            raise DimensionMismatchError(f"action must have {self.action_dim} entries")

        i = self._cursor
        self._states[i] = state
        self._actions[i] = action
        self._rewards[i] = transition.reward
        self._next_states[i] = next_state
        self._dones[i] = float(transition.done)
        self._cursor = (i + 1) % self.capacity  # oldest entry is overwritten first
        self.size = min(self.size + 1, self.capacity)

    def extend(self, transitions: list[Transition]) -> None:
        for transition in transitions:
            self.add(transition)

    def sample(self, batch_size: int) -> Batch:
        """Uniform draw without replacement (capped at the current size)."""
        if self.size == 0:
            raise DegenerateBatchError("degenerate batch: replay buffer is empty")
        idx = self.rng.choice(self.size, size=min(batch_size, self.size), replace=False)
        return Batch(
            states=self._states[idx].copy(),
            actions=self._actions[idx].copy(),
            rewards=self._rewards[idx].copy(),
            next_states=self._next_states[idx].copy(),
            dones=self._dones[idx].copy(),
        )

    def transitions(self) -> list[Transition]:
        """Stored transitions, oldest first."""
        start = self._cursor if self.size == self.capacity else 0
        order = [(start + k) % self.capacity for k in range(self.size)]
        return [
            Transition(
                state=self._states[i].copy(),
                action=self._actions[i].copy(),
                reward=float(self._rewards[i]),
                next_state=self._next_states[i].copy(),
                done=bool(self._dones[i]),
            )
            for i in order
        ]
