"""Pipeline module - Training orchestration, evaluation, contour dumps and profiles."""

from .decorators import timer, log_execution
from .seeding import SeedBundle, split_seed
from .metrics import (
    METRICS_COLUMNS,
    METRICS_SCHEMA,
    MetricsRow,
    merge_metrics,
    read_csv_rows,
    write_csv,
    write_metrics,
)
from .evaluation import evaluate_policy, interquartile_mean, load_checkpoint_policy, run_eval
from .orchestrator import SeedOutcome, expand_sweep, run_training, train_seed
from .contour import (
    CONTOUR_COLUMNS,
    CONTOUR_SCHEMA,
    ContourGrid,
    WaveReport,
    check_wave,
    contour_grid,
    read_contour_csv,
    write_contour_csv,
)
from .profile import (
    PROFILE_COLUMNS,
    PROFILE_SCHEMA,
    ProfileResult,
    final_scores,
    performance_profile,
    write_profile,
)

__all__ = [
    "timer",
    "log_execution",
    "SeedBundle",
    "split_seed",
    "METRICS_COLUMNS",
    "METRICS_SCHEMA",
    "MetricsRow",
    "merge_metrics",
    "read_csv_rows",
    "write_csv",
    "write_metrics",
    "evaluate_policy",
    "interquartile_mean",
    "load_checkpoint_policy",
    "run_eval",
    "SeedOutcome",
    "expand_sweep",
    "run_training",
    "train_seed",
    "CONTOUR_COLUMNS",
    "CONTOUR_SCHEMA",
    "ContourGrid",
    "WaveReport",
    "check_wave",
    "contour_grid",
    "read_contour_csv",
    "write_contour_csv",
    "PROFILE_COLUMNS",
    "PROFILE_SCHEMA",
    "ProfileResult",
    "final_scores",
    "performance_profile",
    "write_profile",
]
