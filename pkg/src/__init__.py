"""Pseudo-quantized actor-critic - TD-error shaping learning rules and desk-scale experiments."""

__version__ = "0.1.0"
