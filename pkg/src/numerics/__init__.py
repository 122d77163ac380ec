"""Numerics module - Stable sigmoid, softplus and log-sigmoid primitives."""

from .scalar import sigmoid, softplus, log_sigmoid, sigmoid_difference, log_sigmoid_variance

__all__ = ["sigmoid", "softplus", "log_sigmoid", "sigmoid_difference", "log_sigmoid_variance"]
