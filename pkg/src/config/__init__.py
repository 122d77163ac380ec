"""Configuration module - Process settings and run-config loading."""

from .settings import Settings, get_settings
from .run_config import (
    RunConfig,
    AgentConfig,
    OptimalitySettings,
    EnvConfig,
    WrapperConfig,
    EvalConfig,
    SweepConfig,
    load_run_config,
    parse_config_text,
    build_run_config,
)

__all__ = [
    "Settings",
    "get_settings",
    "RunConfig",
    "AgentConfig",
    "OptimalitySettings",
    "EnvConfig",
    "WrapperConfig",
    "EvalConfig",
    "SweepConfig",
    "load_run_config",
    "parse_config_text",
    "build_run_config",
]
