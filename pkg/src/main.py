"""Main entry point with Click CLI for training, contour dumps, evaluation and profiles."""

import logging
from contextlib import contextmanager
from pathlib import Path
from typing import Optional

import click

from . import __version__
from .config import get_settings, load_run_config
from .envs import ENV_NAMES
from .errors import ConfigError, PQACError
from .optimality import OptimalityConfig
from .pipeline import (
    check_wave,
    contour_grid,
    performance_profile,
    read_contour_csv,
    run_eval,
    run_training,
    write_contour_csv,
    write_profile,
)
from .transforms import TransformKind

logger = logging.getLogger(__name__)


class ConfigFailure(click.ClickException):
    """Invalid configuration or arguments."""
    exit_code = 2


class RuntimeFailure(click.ClickException):
    """A command started but could not finish."""
    exit_code = 3


@contextmanager
def failures_as_exit_codes():
    """Translate package errors into the CLI's exit codes."""
    try:
        yield
    except ConfigError as e:
        raise ConfigFailure(str(e)) from e
    except (PQACError, ValueError, OSError) as e:
        raise RuntimeFailure(str(e)) from e


def _int_list(text: str, option: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise ConfigFailure(f"{option} expects comma-separated integers, got {text!r}") from None


@click.group()
@click.version_option(version=__version__)
@click.option("--log-level", default=None, help="Override PQAC_LOG_LEVEL (DEBUG, INFO, ...)")
def cli(log_level: Optional[str]):
    """Pseudo-quantized actor-critic: training, rule contours, evaluation and profiles."""
    level = (log_level or get_settings().log_level).upper()
    logging.basicConfig(
        level=getattr(logging, level, logging.INFO),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )


@cli.command()
@click.option("--config", "-c", "config_path", required=True, help="Run configuration file")
@click.option("--seeds", "-s", help="Comma-separated seeds (overrides run.seeds)")
@click.option("--out", "-o", help="Output directory (overrides run.output_dir)")
@click.option("--workers", "-w", type=click.IntRange(min=1), help="Seeds trained in parallel")
def train(config_path: str, seeds: Optional[str], out: Optional[str], workers: Optional[int]):
    """Train every configured seed and write metrics CSVs plus checkpoints."""
    settings = get_settings()
    with failures_as_exit_codes():
        config = load_run_config(config_path)
    seed_list = _int_list(seeds, "--seeds") if seeds else None
    out_dir = out or config.run.output_dir or settings.output_directory
    worker_count = workers or config.run.workers or settings.workers

    with failures_as_exit_codes():
        stats = run_training(config, seeds=seed_list, out_dir=out_dir, workers=worker_count)

    click.echo(f"Runs completed: {stats['runs']}")
    for (run_id, seed), score in stats["final_eval"].items():
        shown = "n/a" if score is None else f"{score:.4f}"
        click.echo(f"  {run_id} seed {seed}: final eval {shown}")
    click.echo(f"Metrics: {stats['metrics']}")


@cli.command()
@click.option(
    "--kind", "-k", required=True, type=click.Choice([k.value for k in TransformKind])
)
@click.option("--lambda", "sharpness", default=4.0, type=float, help="Sharpness lambda > 0")
@click.option("--levels", "-L", default=4, type=click.IntRange(min=1), help="Level count L")
@click.option("--lo", default=0.0, type=float, help="Lower value bound")
@click.option("--hi", default=1.0, type=float, help="Upper value bound")
@click.option("--grid", "-n", default=101, type=click.IntRange(min=1), help="Points per axis")
@click.option("--delta-span", default=2.0, type=float, help="delta axis covers +/- this value")
@click.option("--out", "-o", help="Output CSV (default: <output dir>/contour_<kind>.csv)")
@click.option(
    "--check-wave", "wave", is_flag=True, help="Check level-boundary dips on the emitted CSV"
)
def contour(kind, sharpness, levels, lo, hi, grid, delta_span, out, wave):
    """Dump (sigma_v, delta, transform, weight, error) over a V x delta grid."""
    try:
        dump = contour_grid(kind, sharpness, levels, lo, hi, grid, delta_span=delta_span)
    except ValueError as e:
        raise ConfigFailure(str(e)) from e
    path = Path(out) if out else Path(get_settings().output_directory) / f"contour_{kind}.csv"

    with failures_as_exit_codes():
        write_contour_csv(path, dump)
    click.echo(f"Contour written to {path}")
    if not wave:
        return

    cfg = OptimalityConfig(sharpness=sharpness, levels=levels, bound_lo=lo, bound_hi=hi)
    try:
        report = check_wave(read_contour_csv(path), kind, cfg)
    except ValueError as e:
        raise RuntimeFailure(f"wave check: {e}") from e
    click.echo("Center slopes:   " + ", ".join(f"{s:.6f}" for s in report.center_slopes))
    click.echo("Midpoint slopes: " + ", ".join(f"{s:.6f}" for s in report.midpoint_slopes))
    if not report.holds:
        raise RuntimeFailure("quantization wave not found: a midpoint slope is not a dip")
    click.echo("Quantization wave: ok")


@cli.command(name="eval")
@click.option("--checkpoint", "-p", required=True, help="Checkpoint directory or policy file")
@click.option("--env", "-e", "env_name", required=True, type=click.Choice(list(ENV_NAMES)))
@click.option("--episodes", "-n", default=100, type=click.IntRange(min=1))
@click.option("--seed", "-s", default=0, type=int, help="Episode k resets with seed + k")
def evaluate(checkpoint: str, env_name: str, episodes: int, seed: int):
    """Interquartile-mean task return of a checkpointed policy at its mean action."""
    with failures_as_exit_codes():
        score = run_eval(checkpoint, env_name, episodes, seed)
    click.echo(repr(score))


@cli.command()
@click.option(
    "--inputs", "-i", required=True, help="Comma-separated metrics CSVs, one per condition"
)
@click.option("--out", "-o", required=True, help="Output profile CSV")
def profile(inputs: str, out: str):
    """Performance profiles of final scores, min-max normalized over all runs."""
    paths = [part.strip() for part in inputs.split(",") if part.strip()]
    if not paths:
        raise ConfigFailure("--inputs names no files")
    with failures_as_exit_codes():
        result = performance_profile(paths)
        write_profile(out, result)
    for condition, values in result.scores.items():
        click.echo(f"{condition}: {len(values)} run(s)")
    click.echo(f"Profile written to {out}")


@cli.command()
def config():
    """Show current process settings."""
    settings = get_settings()

    click.echo("\n=== Current Configuration ===")
    click.echo(f"Output Directory: {settings.output_directory}")
    click.echo(f"Log Level: {settings.log_level}")
    click.echo(f"Workers: {settings.workers}")


if __name__ == "__main__":
    cli()
