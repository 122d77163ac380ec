"""Tests for config module."""

import pytest

from src.config import (
    RunConfig,
    Settings,
    build_run_config,
    get_settings,
    load_run_config,
    parse_config_text,
)
from src.errors import ConfigError
from src.transforms import TransformKind


def _load(tmp_path, text: str) -> RunConfig:
    path = tmp_path / "run.conf"
    path.write_text(text, encoding="utf-8")
    return load_run_config(path)


def test_settings_defaults():
    """Test default settings values."""
    settings = Settings()

    assert settings.output_directory == "runs"
    assert settings.log_level == "INFO"
    assert settings.workers == 1


def test_settings_from_environment(monkeypatch):
    """Test PQAC_* overrides through the cached accessor."""
    monkeypatch.setenv("PQAC_WORKERS", "3")
    monkeypatch.setenv("PQAC_OUTPUT_DIRECTORY", "elsewhere")
    get_settings.cache_clear()
    try:
        settings = get_settings()
        assert settings.workers == 3
        assert settings.output_directory == "elsewhere"
        assert get_settings() is settings
    finally:
        get_settings.cache_clear()


def test_run_config_defaults():
    """Test the desk-scale defaults of an empty file."""
    config = build_run_config({}, {})
    assert config.env.name == "pendulum"
    assert config.agent.transform_kind is TransformKind.JS
    assert config.agent.optimality.sharpness == 4.0
    assert config.agent.optimality.levels == 4
    assert config.agent.hidden == [64, 64]
    assert config.run.seeds == [0]
    assert not config.run.record_wall_clock


def test_parse_and_coerce(tmp_path):
    """Test comments, list values, the lambda alias and the optimality shorthand."""
    config = _load(
        tmp_path,
        "# demo run\n"
        "run.name = demo  # trailing comment\n"
        "run.seeds = 1, 2, 3\n"
        "agent.transform_kind = FKL\n"
        "agent.hidden = 16,16\n"
        "optimality.lambda = 2.5\n"
        "agent.optimality.levels = 2\n"
        "env.name = pointmass\n"
        "env.step_cap = 50\n"
        "wrappers.noisy_reward = true\n",
    )
    assert config.run.name == "demo"
    assert config.run.seeds == [1, 2, 3]
    assert config.agent.transform_kind is TransformKind.FKL
    assert config.agent.hidden == [16, 16]
    assert config.agent.optimality.sharpness == 2.5
    assert config.agent.optimality.levels == 2
    assert config.env.step_cap == 50
    assert config.wrappers.noisy_reward


def test_sweep_lists(tmp_path):
    """Test comma-separated sweep values."""
    config = _load(tmp_path, "sweep.kinds = js, Linear\nsweep.levels = 1,4\n")
    assert config.sweep.kinds == [TransformKind.JS, TransformKind.LINEAR]
    assert config.sweep.levels == [1, 4]


def test_unknown_key_reports_line(tmp_path):
    """Test that a misspelled key fails with its line number."""
    with pytest.raises(ConfigError) as excinfo:
        _load(tmp_path, "run.name = x\nagent.gamm = 0.9\n")
    assert excinfo.value.line == 2
    assert "agent.gamm" in str(excinfo.value)


def test_bad_value_reports_key_and_line(tmp_path):
    """Test that a type error names the dotted key and the offending line."""
    with pytest.raises(ConfigError) as excinfo:
        _load(tmp_path, "run.name = x\n\nagent.gamma = abc\n")
    message = str(excinfo.value)
    assert ":3:" in message
    assert "agent.gamma" in message


def test_out_of_range_value(tmp_path):
    """Test field constraints such as gamma < 1 and lambda > 0."""
    with pytest.raises(ConfigError, match="agent.gamma"):
        _load(tmp_path, "agent.gamma = 1.0\n")
    with pytest.raises(ConfigError):
        _load(tmp_path, "optimality.lambda = 0\n")


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("run.name demo\n", "key = value"),
        ("run.name = a\nrun.name = b\n", "duplicate key"),
        ("run..name = a\n", "malformed key"),
        ("agent = 1\nagent.gamma = 0.9\n", "conflicts"),
        ("env.name = cartpole\n", "unknown environment"),
    ],
)
def test_malformed_files(tmp_path, text, fragment):
    """Test syntax errors, duplicates, conflicts and unknown environments."""
    with pytest.raises(ConfigError, match=fragment):
        _load(tmp_path, text)


def test_missing_file(tmp_path):
    """Test that an unreadable file is a configuration error."""
    with pytest.raises(ConfigError, match="cannot read config"):
        load_run_config(tmp_path / "absent.conf")


def test_parse_config_text_lines():
    """Test the raw key/line split."""
    values, lines = parse_config_text("a.b = 1\n\n# note\nc.d = x = y\n")
    assert values == {"a.b": "1", "c.d": "x = y"}
    assert lines == {"a.b": 1, "c.d": 4}
