"""Tests for pipeline decorators, seeding, metrics, evaluation and orchestration."""

import logging
import time

import numpy as np
import pytest

from src.config import build_run_config, parse_config_text
from src.envs import Pendulum
from src.approximator import GaussianPolicy
from src.errors import DegenerateBatchError
from src.pipeline import (
    METRICS_COLUMNS,
    MetricsRow,
    evaluate_policy,
    expand_sweep,
    interquartile_mean,
    log_execution,
    merge_metrics,
    read_csv_rows,
    split_seed,
    timer,
    train_seed,
    write_metrics,
)
from src.pipeline.metrics import format_cell
from src.pipeline.orchestrator import _is_eval_episode


def _config(text: str):
    values, lines = parse_config_text(text)
    return build_run_config(values, lines)


TINY_RUN = (
    "run.episodes = 3\n"
    "env.step_cap = 10\n"
    "agent.hidden = 8\n"
    "agent.batch_size = 16\n"
    "agent.updates_per_episode = 2\n"
    "eval.episodes = 2\n"
    "eval.every = 2\n"
)


def test_timer_decorator(caplog):
    """Test that timer decorator measures execution time."""
    @timer
    def slow_function():
        time.sleep(0.01)
        return "done"

    with caplog.at_level(logging.INFO):
        result = slow_function()
    assert result == "done"
    assert "slow_function executed in" in caplog.text


def test_log_execution_decorator(caplog):
    """Test log execution decorator."""
    @log_execution
    def example_func():
        return 42

    with caplog.at_level(logging.INFO):
        result = example_func()
    assert result == 42
    assert "example_func completed successfully" in caplog.text


def test_log_execution_reraises(caplog):
    """Test that failures are logged and propagated unchanged."""
    @log_execution
    def broken():
        raise KeyError("missing")

    with pytest.raises(KeyError):
        broken()
    assert "broken failed" in caplog.text


def test_split_seed_is_deterministic_and_independent():
    """Test five distinct 32-bit streams per seed, stable across calls."""
    bundle = split_seed(0)
    assert bundle == split_seed(0)
    streams = [bundle.env, bundle.policy_init, bundle.buffer, bundle.action, bundle.eval]
    assert len(set(streams)) == 5
    assert all(0 <= s < 2**32 for s in streams)
    assert split_seed(1) != bundle


def test_format_cell():
    """Test repr floats, plain ints and blank None cells."""
    assert format_cell(None) == ""
    assert format_cell(0.1) == "0.1"
    assert format_cell(1 / 3) == repr(1 / 3)
    assert format_cell(7) == "7"


def test_write_metrics_layout(tmp_path):
    """Test the schema line, header and LF endings."""
    rows = [
        MetricsRow("r", 0, 0, -10.5),
        MetricsRow("r", 0, 1, -9.0, eval_iqm_return=-8.25, bound_lo=-1.0, bound_hi=2.0),
    ]
    path = write_metrics(tmp_path / "m.csv", rows)
    raw = path.read_bytes()
    assert b"\r" not in raw
    lines = raw.decode().splitlines()
    assert lines[0] == "# pqac-metrics v1"
    assert lines[1].split(",") == METRICS_COLUMNS
    assert lines[2] == "r,0,0,-10.5,,,,,"

    parsed = read_csv_rows(path)
    assert parsed[1]["eval_iqm_return"] == "-8.25"
    assert parsed[0]["wall_ms"] == ""


def test_merge_metrics(tmp_path):
    """Test that merged files keep one header and every row in order."""
    first = write_metrics(tmp_path / "a.csv", [MetricsRow("a", 0, 0, 1.0)])
    second = write_metrics(tmp_path / "b.csv", [MetricsRow("b", 1, 0, 2.0)])
    merged = merge_metrics([first, second], tmp_path / "all.csv")
    rows = read_csv_rows(merged)
    assert [r["run_id"] for r in rows] == ["a", "b"]
    assert merged.read_text().count("# pqac-metrics v1") == 1


@pytest.mark.parametrize(
    "values, expected",
    [
        ([5.0], 5.0),
        ([1.0, 2.0, 3.0], 2.0),
        ([1.0, 2.0, 3.0, 100.0], 2.5),
        ([8.0, 1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0], 4.5),
        ([-1000.0] + [1.0] * 6 + [1000.0], 1.0),
    ],
)
def test_interquartile_mean(values, expected):
    """Test the trimmed mean on small samples."""
    assert interquartile_mean(values) == pytest.approx(expected)


def test_interquartile_mean_empty():
    """Test that no returns is a degenerate batch."""
    with pytest.raises(DegenerateBatchError):
        interquartile_mean([])


def test_evaluate_policy_seeds_episodes():
    """Test one return per episode and reproducible greedy rollouts."""
    policy = GaussianPolicy.init(3, 1, (4,), seed=0)
    first = evaluate_policy(Pendulum(), policy, 3, base_seed=10)
    second = evaluate_policy(Pendulum(), policy, 3, base_seed=10)
    assert len(first) == 3
    assert first == second
    assert all(r <= 0.0 for r in first)


def test_is_eval_episode():
    """Test the evaluation cadence including the last episode."""
    picked = [e for e in range(7) if _is_eval_episode(e, every=3, total=7)]
    assert picked == [2, 5, 6]


def test_expand_sweep():
    """Test one setting without a sweep and the kind x levels grid with one."""
    plain = _config("run.name = base\n")
    assert [run_id for run_id, _ in expand_sweep(plain)] == ["base"]

    swept = expand_sweep(_config("run.name = s\nsweep.kinds = js,fkl\nsweep.levels = 1,4\n"))
    assert [run_id for run_id, _ in swept] == ["s-js-L1", "s-js-L4", "s-fkl-L1", "s-fkl-L4"]
    _, last = swept[-1]
    assert last.agent.transform_kind.value == "fkl"
    assert last.agent.optimality.levels == 4


def test_train_seed_artifacts(tmp_path):
    """Test metrics rows, evaluation cadence and checkpoint of one short run."""
    outcome = train_seed(_config(TINY_RUN), seed=3, run_id="tiny", out_dir=tmp_path)

    assert outcome.metrics_path == tmp_path / "tiny" / "seed-3" / "metrics.csv"
    assert (outcome.checkpoint_dir / "metadata.json").exists()
    rows = read_csv_rows(outcome.metrics_path)
    assert [r["episode"] for r in rows] == ["0", "1", "2"]
    assert [bool(r["eval_iqm_return"]) for r in rows] == [False, True, True]
    assert float(rows[-1]["eval_iqm_return"]) == outcome.final_eval
    # 10 transitions after episode 0 do not fill a 16-sample batch
    assert rows[0]["bound_lo"] == "" and rows[0]["mean_abs_weight"] == ""
    assert rows[1]["mean_abs_weight"] != ""
    assert float(rows[-1]["bound_lo"]) < float(rows[-1]["bound_hi"])
    assert all(r["wall_ms"] == "" for r in rows)


def test_train_seed_is_reproducible(tmp_path):
    """Test byte-identical metrics from the same seed."""
    config = _config(TINY_RUN)
    first = train_seed(config, 5, "a", tmp_path / "one")
    second = train_seed(config, 5, "a", tmp_path / "two")
    assert first.metrics_path.read_bytes() == second.metrics_path.read_bytes()
    assert np.isfinite(first.final_eval)
