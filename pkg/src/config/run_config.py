"""Run configuration: dotted-key text files validated by Pydantic models.

A config file holds one ``section.key = value`` per line; ``#`` starts a comment.
Values stay strings until Pydantic coerces them, and every validation error is
reported against the line that set the offending key.
"""

import logging
from pathlib import Path
from typing import Any, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from ..errors import ConfigError
from ..transforms import TransformKind

logger = logging.getLogger(__name__)


class _Section(BaseModel):
    # extra="forbid": a misspelled key is an error instead of being silently ignored
    model_config = ConfigDict(extra="forbid", populate_by_name=True)


def _split_list(value: Any) -> Any:
    if isinstance(value, str):
        return [item.strip() for item in value.split(",") if item.strip()]
    return value


class OptimalitySettings(_Section):
    """Sharpness, level count and bound-tracker constants."""
    sharpness: float = Field(4.0, alias="lambda", gt=0)
    levels: int = Field(4, ge=1)  # L
    epsilon: float = Field(1e-5, gt=0)
    horizon: int = Field(200, gt=0)  # K


class AgentConfig(_Section):
    """Learning rule and actor-critic hyperparameters."""
    gamma: float = Field(0.99, ge=0, lt=1)
    transform_kind: TransformKind = TransformKind.JS
    optimality: OptimalitySettings = Field(default_factory=OptimalitySettings)
    ensemble_size: int = Field(2, ge=1)
    polyak_tau: float = Field(0.01, gt=0, le=1)
    batch_size: int = Field(128, ge=1)
    buffer_capacity: int = Field(20_000, ge=1)
    updates_per_episode: int = Field(200, ge=0)
    reward_scale: float = Field(1.0, gt=0)  # multiplies r in the TD target
    critic_lr: float = Field(1e-3, gt=0)
    actor_lr: float = Field(3e-4, gt=0)
    hidden: list[int] = Field(default_factory=lambda: [64, 64])
    init_log_std: float = -0.5

    @field_validator("hidden", mode="before")
    @classmethod
    def _hidden_list(cls, value):
        return _split_list(value)

    @field_validator("transform_kind", mode="before")
    @classmethod
    def _kind_lower(cls, value):
        return value.lower() if isinstance(value, str) else value


class EnvConfig(_Section):
    name: str = "pendulum"
    step_cap: Optional[int] = Field(None, ge=0)  # None = the task's own max_steps

    @field_validator("name")
    @classmethod
    def _known_env(cls, value: str) -> str:
        from ..envs import ENV_NAMES

        if value not in ENV_NAMES:
            raise ValueError(f"unknown environment {value!r}; choose from {', '.join(ENV_NAMES)}")
        return value


class WrapperConfig(_Section):
    noisy_reward: bool = False
    freeze_variance: bool = False
    guided_expert: Optional[str] = None  # path to an expert policy checkpoint


class EvalConfig(_Section):
    episodes: int = Field(10, ge=1)
    every: int = Field(10, ge=1)  # evaluate every N training episodes and after the last


class SweepConfig(_Section):
    """Optional grid: each listed value reruns every seed."""
    levels: Optional[list[int]] = None
    kinds: Optional[list[TransformKind]] = None

    @field_validator("levels", "kinds", mode="before")
    @classmethod
    def _lists(cls, value):
        value = _split_list(value)
        if isinstance(value, list):
            return [v.lower() if isinstance(v, str) else v for v in value]
        return value


class RunSection(_Section):
    name: str = "run"
    seeds: list[int] = Field(default_factory=lambda: [0])
    episodes: int = Field(150, ge=0)
    output_dir: Optional[str] = None
    workers: Optional[int] = Field(None, ge=1)
    record_wall_clock: bool = False

    @field_validator("seeds", mode="before")
    @classmethod
    def _seed_list(cls, value):
        return _split_list(value)


class RunConfig(_Section):
    """Complete description of one training invocation."""
    run: RunSection = Field(default_factory=RunSection)
    env: EnvConfig = Field(default_factory=EnvConfig)
    wrappers: WrapperConfig = Field(default_factory=WrapperConfig)
    agent: AgentConfig = Field(default_factory=AgentConfig)
    eval: EvalConfig = Field(default_factory=EvalConfig)
    sweep: SweepConfig = Field(default_factory=SweepConfig)


def _nest(flat: dict[str, str], lines: dict[str, int], path: str) -> dict[str, Any]:
    tree: dict[str, Any] = {}
    for key, value in flat.items():
        node = tree
        *parents, leaf = key.split(".")
        for part in parents:
            node = node.setdefault(part, {})
            if not isinstance(node, dict):
                message = f"{key!r} conflicts with a plain value for {part!r}"
                raise ConfigError(message, path, lines[key])
        if isinstance(node.get(leaf), dict):
            raise ConfigError(f"{key!r} names a section, not a value", path, lines[key])
        node[leaf] = value
    return tree


def _alias_key(key: str) -> str:
    # agent.optimality.* may be written as optimality.*
    return f"agent.{key}" if key.startswith("optimality.") else key


def parse_config_text(text: str, path: str = "<config>") -> tuple[dict[str, str], dict[str, int]]:
    """Split a config file into {dotted key: raw value} and {dotted key: line number}."""
    values: dict[str, str] = {}
    lines: dict[str, int] = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"expected 'key = value', got {raw.strip()!r}", path, number)
        key, value = (part.strip() for part in line.split("=", 1))
        if not key or any(not part for part in key.split(".")):
            raise ConfigError(f"malformed key {key!r}", path, number)
        key = _alias_key(key)
        if key in values:
            message = f"duplicate key {key!r} (first set on line {lines[key]})"
            raise ConfigError(message, path, number)
        values[key] = value
        lines[key] = number
    return values, lines


def _error_line(loc: tuple, lines: dict[str, int]) -> Optional[int]:
    parts = [str(p) for p in loc if not isinstance(p, int)]
    while parts:
        key = ".".join(parts)
        if key in lines:
            return lines[key]
        parts.pop()
    return None


def build_run_config(
    values: dict[str, str], lines: dict[str, int], path: str = "<config>"
) -> RunConfig:
    try:
        return RunConfig.model_validate(_nest(values, lines, path))
    except ValidationError as e:
        first = e.errors()[0]
        key = ".".join(str(p) for p in first["loc"])
        raise ConfigError(f"{key}: {first['msg']}", path, _error_line(first["loc"], lines)) from e


def load_run_config(path: Union[str, Path]) -> RunConfig:
    """Read and validate a run configuration file."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise ConfigError(f"cannot read config: {e.strerror}", str(path)) from e
    values, lines = parse_config_text(text, str(path))
    config = build_run_config(values, lines, str(path))
    logger.info(f"loaded run config {path} ({len(values)} keys)")
    return config
