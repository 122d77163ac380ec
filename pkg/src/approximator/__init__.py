"""Approximator module - MLP value nets, Gaussian policy, optimizer and checkpoints."""

from .mlp import Mlp, forward, value_grad
from .policy import GaussianPolicy, log_prob, log_prob_grad, sample_action, mean_action
from .optim import OptimizerState, apply_update
from .checkpoint import save_net, load_net, save_policy, load_policy

__all__ = [
    "Mlp",
    "forward",
    "value_grad",
    "GaussianPolicy",
    "log_prob",
    "log_prob_grad",
    "sample_action",
    "mean_action",
    "OptimizerState",
    "apply_update",
    "save_net",
    "load_net",
    "save_policy",
    "load_policy",
]
