"""Performance profiles over the final scores of many runs."""

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence, Union

import numpy as np

from ..errors import DegenerateNormalizationError
from .metrics import read_csv_rows, write_csv

logger = logging.getLogger(__name__)

PROFILE_SCHEMA = "# pqac-profile v1"
PROFILE_COLUMNS = ["condition", "threshold", "fraction"]
THRESHOLDS = [k / 100 for k in range(101)]


@dataclass
class ProfileResult:
    """Fraction of each condition's runs whose normalized score exceeds each threshold."""
    thresholds: list[float]
    curves: dict[str, list[float]] = field(default_factory=dict)
    scores: dict[str, list[float]] = field(default_factory=dict)  # raw final scores

    def rows(self):
        for condition, fractions in self.curves.items():
            for threshold, fraction in zip(self.thresholds, fractions):
                yield condition, threshold, fraction


def final_scores(path: Union[str, Path]) -> list[float]:
    """One score per (run_id, seed): its last evaluation, else its last training return."""
    last_eval: dict[tuple[str, str], float] = {}
    last_train: dict[tuple[str, str], float] = {}
    for row in sorted(read_csv_rows(path), key=lambda r: int(r["episode"])):
        key = (row["run_id"], row["seed"])
        last_train[key] = float(row["train_return"])
        if row["eval_iqm_return"]:
            last_eval[key] = float(row["eval_iqm_return"])
    return [last_eval.get(key, train) for key, train in last_train.items()]


def _condition_names(inputs: Sequence[Path]) -> list[str]:
    stems = [path.stem for path in inputs]
    return [
        f"{path.parent.name}/{path.stem}" if stems.count(path.stem) > 1 else path.stem
        for path in inputs
    ]


def profile_curve(normalized: np.ndarray, thresholds: Sequence[float]) -> list[float]:
    return [float(np.mean(normalized > tau)) for tau in thresholds]


def performance_profile(inputs: Sequence[Union[str, Path]]) -> ProfileResult:
    """Pooled min-max normalization of final scores, one curve per input file."""
    paths = [Path(p) for p in inputs]
    scores = {
        name: final_scores(path) for name, path in zip(_condition_names(paths), paths)
    }
    pooled = np.array([s for values in scores.values() for s in values], dtype=float)
    if pooled.size < 2:
        raise DegenerateNormalizationError(
            f"degenerate normalization: need at least 2 runs, found {pooled.size}"
        )
    low, high = float(pooled.min()), float(pooled.max())
    if not high > low:
        raise DegenerateNormalizationError(
            "degenerate normalization: fewer than 2 distinct final scores"
        )

    result = ProfileResult(thresholds=list(THRESHOLDS), scores=scores)
    for condition, values in scores.items():
        if not values:
            logger.warning(f"{condition}: no runs, curve skipped")
            continue
        normalized = (np.asarray(values, dtype=float) - low) / (high - low)
        result.curves[condition] = profile_curve(normalized, result.thresholds)
    logger.info(f"profile over {pooled.size} runs in {len(result.curves)} condition(s)")
    return result


def write_profile(path: Union[str, Path], result: ProfileResult) -> Path:
    return write_csv(path, PROFILE_SCHEMA, PROFILE_COLUMNS, result.rows())
