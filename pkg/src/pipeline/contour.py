"""Contour dumps of the learning rules over (V, delta) and the quantization-wave post-check."""

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator, Optional, Sequence, Union

import numpy as np

from ..numerics import sigmoid
from ..optimality import OptimalityConfig, level_centers, sharpness_scale
from ..transforms import TransformKind, decompose, decompose_mixture, transform
from .metrics import read_csv_rows, write_csv

logger = logging.getLogger(__name__)

CONTOUR_SCHEMA = "# pqac-contour v1"
CONTOUR_COLUMNS = ["sigma_v", "delta", "transform", "weight", "error"]


@dataclass
class ContourGrid:
    """Row-major (V outer, delta inner) evaluation of one learning rule."""
    kind: TransformKind
    config: OptimalityConfig
    values: np.ndarray  # (N,) V axis
    deltas: np.ndarray  # (N,) delta axis
    sigma_v: np.ndarray  # (N,)
    transformed: np.ndarray  # (N, N)
    weight: Optional[np.ndarray] = None  # blank for the linear rule
    error: Optional[np.ndarray] = None

    def rows(self) -> Iterator[tuple]:
        for i, sigma in enumerate(self.sigma_v):
            for j, delta in enumerate(self.deltas):
                weight = None if self.weight is None else float(self.weight[i, j])
                error = None if self.error is None else float(self.error[i, j])
                yield float(sigma), float(delta), float(self.transformed[i, j]), weight, error


def display_sigma(values: np.ndarray, cfg: OptimalityConfig) -> np.ndarray:
    """sigma(2 * lambda * (V - mid) / span): the single-level optimality of V."""
    return sigmoid(2.0 * cfg.sharpness * (values - cfg.midpoint) / cfg.span)


def _value_from_sigma(sigma: float, cfg: OptimalityConfig) -> float:
    logit = np.log(sigma) - np.log1p(-sigma)
    return cfg.midpoint + logit * cfg.span / (2.0 * cfg.sharpness)


def _level_decomposition(
    kind: TransformKind, delta: np.ndarray, v: np.ndarray, cfg: OptimalityConfig
) -> tuple[np.ndarray, np.ndarray]:
    # weights and errors are averaged over levels separately
    lambda_o = sharpness_scale(cfg)
    parts = [
        decompose_mixture(delta, v, mu, lambda_o)
        if kind is TransformKind.JEFFREYS
        else decompose(kind, delta, v, mu, lambda_o)
        for mu in level_centers(cfg)
    ]
    weight = np.mean([p.weight for p in parts], axis=0)
    error = np.mean([p.error for p in parts], axis=0)
    return weight, error


def contour_grid(
    kind: Union[TransformKind, str],
    sharpness: float,
    levels: int,
    lo: float,
    hi: float,
    grid: int,
    delta_span: float = 2.0,
) -> ContourGrid:
    """Evaluate ``kind`` on an N x N grid.

    V covers [lo - span/2, hi + span/2] and delta covers [-delta_span, delta_span].
    """
    if grid < 1:
        raise ValueError(f"grid size must be at least 1, got {grid}")
    if not delta_span > 0:
        raise ValueError(f"delta_span must be positive, got {delta_span}")
    kind = TransformKind(kind)
    cfg = OptimalityConfig(sharpness=sharpness, levels=levels, bound_lo=lo, bound_hi=hi)

    values = np.linspace(lo - 0.5 * cfg.span, hi + 0.5 * cfg.span, grid)
    deltas = np.linspace(-delta_span, delta_span, grid)
    v_mesh, delta_mesh = np.meshgrid(values, deltas, indexing="ij")

    result = ContourGrid(
        kind=kind,
        config=cfg,
        values=values,
        deltas=deltas,
        sigma_v=display_sigma(values, cfg),
        transformed=transform(kind, delta_mesh, v_mesh, cfg) * np.ones_like(v_mesh),
    )
    if kind is not TransformKind.LINEAR:
        result.weight, result.error = _level_decomposition(kind, delta_mesh, v_mesh, cfg)
    return result


def write_contour_csv(path: Union[str, Path], contour: ContourGrid) -> Path:
    path = write_csv(path, CONTOUR_SCHEMA, CONTOUR_COLUMNS, contour.rows())
    logger.info(f"{contour.kind.value} contour ({len(contour.values)}^2 rows) written to {path}")
    return path


def read_contour_csv(path: Union[str, Path]) -> list[tuple[float, float, float]]:
    """(sigma_v, delta, transform) triples of an emitted contour file."""
    return [
        (float(row["sigma_v"]), float(row["delta"]), float(row["transform"]))
        for row in read_csv_rows(path)
    ]


@dataclass
class WaveReport:
    """Slopes along delta at delta = 0, on level centers and on the midpoints between them."""
    kind: TransformKind
    center_slopes: list[float]
    midpoint_slopes: list[float]  # midpoint i lies between centers i and i + 1

    @property
    def strict(self) -> bool:
        """Every midpoint slope is below both adjacent center slopes."""
        return all(
            mid < self.center_slopes[i] and mid < self.center_slopes[i + 1]
            for i, mid in enumerate(self.midpoint_slopes)
        )

    @property
    def averaged(self) -> bool:
        """Every midpoint slope is below the mean of its adjacent center slopes."""
        return all(
            mid < 0.5 * (self.center_slopes[i] + self.center_slopes[i + 1])
            for i, mid in enumerate(self.midpoint_slopes)
        )

    @property
    def holds(self) -> bool:
        # JS dips are measured against the mean of the adjacent centers
        return self.averaged if self.kind is TransformKind.JS else self.strict


def _slopes_at_zero(
    rows: Sequence[tuple[float, float, float]],
) -> tuple[np.ndarray, np.ndarray]:
    rows = list(rows)
    sigmas = np.array([r[0] for r in rows])
    deltas = np.array([r[1] for r in rows])
    transformed = np.array([r[2] for r in rows])
    n_delta = int(np.count_nonzero(sigmas == sigmas[0]))
    if n_delta < 2 or len(rows) % n_delta:
        raise ValueError("contour rows are not a full row-major grid")

    axis = deltas[:n_delta]
    below = np.flatnonzero(axis < 0)
    above = np.flatnonzero(axis > 0)
    if below.size == 0 or above.size == 0:
        raise ValueError("delta axis must straddle zero")
    j_lo, j_hi = below[-1], above[0]

    blocks = transformed.reshape(-1, n_delta)
    slopes = (blocks[:, j_hi] - blocks[:, j_lo]) / (axis[j_hi] - axis[j_lo])
    return sigmas[::n_delta], slopes


def check_wave(
    rows: Sequence[tuple[float, float, float]],
    kind: Union[TransformKind, str],
    cfg: OptimalityConfig,
) -> WaveReport:
    """Quantization-wave post-check on contour rows (sigma_v, delta, transform, ...)."""
    sigmas, slopes = _slopes_at_zero(rows)
    values = np.array([_value_from_sigma(s, cfg) for s in sigmas])

    def slope_near(target: float) -> float:
        return float(slopes[np.argmin(np.abs(values - target))])

    centers = level_centers(cfg)
    midpoints = [0.5 * (a + b) for a, b in zip(centers, centers[1:])]
    report = WaveReport(
        kind=TransformKind(kind),
        center_slopes=[slope_near(c) for c in centers],
        midpoint_slopes=[slope_near(m) for m in midpoints],
    )
    logger.debug(f"wave check {report.kind.value}: {report}")
    return report
