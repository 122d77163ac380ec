"""Transforms module - Nonlinear TD-error learning rules and their decompositions."""

from .rules import TransformKind, transform_level, level_transforms, transform
from .decompose import Decomposition, decompose, decompose_mixture, js_direct_oracle

__all__ = [
    "TransformKind",
    "transform_level",
    "level_transforms",
    "transform",
    "Decomposition",
    "decompose",
    "decompose_mixture",
    "js_direct_oracle",
]
