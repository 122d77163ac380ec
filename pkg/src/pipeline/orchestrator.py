"""Training orchestration: seeded runs, sweeps, per-seed metrics and checkpoints."""

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence, Union

import numpy as np

from ..agent import ActorCriticAgent, run_episode, save_agent
from ..config import RunConfig
from ..envs import make_env
from .decorators import log_execution, timer
from .evaluation import evaluate_policy, interquartile_mean
from .metrics import MetricsRow, merge_metrics, write_metrics
from .seeding import split_seed

logger = logging.getLogger(__name__)


@dataclass
class SeedOutcome:
    """Artifacts of one (setting, seed) run."""
    run_id: str
    seed: int
    metrics_path: Path
    checkpoint_dir: Path
    final_eval: Optional[float]


def expand_sweep(config: RunConfig) -> list[tuple[str, RunConfig]]:
    """One (run_id, config) per swept setting; the config itself when no sweep is set."""
    sweep = config.sweep
    if not sweep.levels and not sweep.kinds:
        return [(config.run.name, config)]

    agent = config.agent
    levels = sweep.levels or [agent.optimality.levels]
    kinds = sweep.kinds or [agent.transform_kind]
    settings = []
    for kind in kinds:
        for level_count in levels:
            optimality = agent.optimality.model_copy(update={"levels": level_count})
            swept_agent = agent.model_copy(
                update={"transform_kind": kind, "optimality": optimality}
            )
            run_id = f"{config.run.name}-{kind.value}-L{level_count}"
            settings.append((run_id, config.model_copy(update={"agent": swept_agent})))
    return settings


def _is_eval_episode(episode: int, every: int, total: int) -> bool:
    return (episode + 1) % every == 0 or episode == total - 1


def train_seed(
    config: RunConfig, seed: int, run_id: str, out_dir: Union[str, Path]
) -> SeedOutcome:
    """Train one seed to its episode budget; writes metrics.csv and checkpoint/."""
    seed_dir = Path(out_dir) / run_id / f"seed-{seed}"
    bundle = split_seed(seed)
    wrappers = config.wrappers
    env = make_env(
        config.env.name,
        noisy_reward=wrappers.noisy_reward,
        freeze_variance=wrappers.freeze_variance,
        guided_expert=wrappers.guided_expert,
        wrapper_seed=bundle.env,
    )
    eval_env = make_env(config.env.name)
    agent = ActorCriticAgent(
        config.agent, env.spec, init_seed=bundle.policy_init, buffer_seed=bundle.buffer
    )
    rng = np.random.default_rng(bundle.action)
    step_cap = config.env.step_cap
    total = config.run.episodes

    rows: list[MetricsRow] = []
    final_eval = None
    for episode in range(total):
        started = time.perf_counter()
        result = run_episode(env, agent, bundle.env + episode, rng, step_cap=step_cap)

        eval_score = None
        if _is_eval_episode(episode, config.eval.every, total):
            returns = evaluate_policy(eval_env, agent.policy, config.eval.episodes, bundle.eval)
            eval_score = interquartile_mean(returns)
            final_eval = eval_score
            logger.info(
                f"{run_id} seed {seed} episode {episode}: train {result.episode_return:.2f}, "
                f"eval {eval_score:.2f}"
            )
        else:
            logger.debug(f"{run_id} seed {seed} episode {episode}: {result.episode_return:.2f}")

        wall_ms = None
        if config.run.record_wall_clock:
            wall_ms = (time.perf_counter() - started) * 1000.0
        tracked = agent.tracker.initialized
        rows.append(
            MetricsRow(
                run_id=run_id,
                seed=seed,
                episode=episode,
                train_return=float(result.episode_return),
                eval_iqm_return=eval_score,
                mean_abs_weight=result.mean_abs_weight,
                bound_lo=float(agent.tracker.bound_lo) if tracked else None,
                bound_hi=float(agent.tracker.bound_hi) if tracked else None,
                wall_ms=wall_ms,
            )
        )

    metrics_path = write_metrics(seed_dir / "metrics.csv", rows)
    checkpoint_dir = save_agent(
        agent,
        seed_dir / "checkpoint",
        {
            "run_id": run_id,
            "seed": seed,
            "episodes": total,
            "config": config.model_dump(mode="json", by_alias=True),
        },
    )
    return SeedOutcome(run_id, seed, metrics_path, checkpoint_dir, final_eval)


@timer
@log_execution
def run_training(
    config: RunConfig,
    seeds: Optional[Sequence[int]] = None,
    out_dir: Optional[Union[str, Path]] = None,
    workers: int = 1,
) -> dict:
    """Run every (setting, seed) pair and merge the per-seed metrics.

    Writes ``<out>/<run_id>.csv`` per setting and ``<out>/metrics.csv`` across all of them.
    """
    seeds = list(config.run.seeds if seeds is None else seeds)
    out = Path(out_dir if out_dir is not None else config.run.output_dir or "runs")
    out.mkdir(parents=True, exist_ok=True)
    jobs = [(cfg, seed, run_id) for run_id, cfg in expand_sweep(config) for seed in seeds]
    logger.info(f"{len(jobs)} runs ({len(seeds)} seeds) into {out}, {workers} worker(s)")

    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [
                pool.submit(train_seed, cfg, seed, run_id, out) for cfg, seed, run_id in jobs
            ]
            outcomes = [future.result() for future in futures]
    else:
        outcomes = [train_seed(cfg, seed, run_id, out) for cfg, seed, run_id in jobs]

    by_setting: dict[str, list[Path]] = {}
    for outcome in outcomes:
        by_setting.setdefault(outcome.run_id, []).append(outcome.metrics_path)
    setting_files = [
        merge_metrics(parts, out / f"{run_id}.csv") for run_id, parts in by_setting.items()
    ]
    merged = merge_metrics([o.metrics_path for o in outcomes], out / "metrics.csv")

    return {
        "runs": len(outcomes),
        "metrics": merged,
        "settings": setting_files,
        "final_eval": {(o.run_id, o.seed): o.final_eval for o in outcomes},
    }
