"""Per-episode metrics rows and their CSV encoding."""

import csv
import io
from dataclasses import astuple, dataclass, fields
from pathlib import Path
from typing import Iterable, Optional, Union

METRICS_SCHEMA = "# pqac-metrics v1"


@dataclass
class MetricsRow:
    """One training episode of one run."""
    run_id: str
    seed: int
    episode: int
    train_return: float
    eval_iqm_return: Optional[float] = None  # only on evaluation episodes
    mean_abs_weight: Optional[float] = None  # None until updates start
    bound_lo: Optional[float] = None
    bound_hi: Optional[float] = None
    wall_ms: Optional[float] = None  # only when wall-clock recording is enabled


METRICS_COLUMNS = [f.name for f in fields(MetricsRow)]


def format_cell(value) -> str:
    """Stable text for CSV cells: repr for floats, blank for None."""
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value)
    return str(value)


def write_csv(
    path: Union[str, Path], schema: str, columns: list[str], rows: Iterable[Iterable]
) -> Path:
    """Schema comment line, header row, then rows; ',' delimiter and LF endings."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", encoding="utf-8", newline="") as fh:
        fh.write(schema + "\n")
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([format_cell(v) for v in row])
    return path


def write_metrics(path: Union[str, Path], rows: Iterable[MetricsRow]) -> Path:
    return write_csv(path, METRICS_SCHEMA, METRICS_COLUMNS, (astuple(r) for r in rows))


def read_csv_rows(path: Union[str, Path]) -> list[dict[str, str]]:
    """Rows of a schema-commented CSV as dicts keyed by the header."""
    text = Path(path).read_text(encoding="utf-8")
    body = "".join(line for line in text.splitlines(keepends=True) if not line.startswith("#"))
    return list(csv.DictReader(io.StringIO(body)))


def merge_metrics(parts: list[Path], path: Union[str, Path]) -> Path:
    """Concatenate per-seed metric files under one header."""
    path = Path(path)
    with path.open("w", encoding="utf-8", newline="") as out:
        out.write(METRICS_SCHEMA + "\n")
        out.write(",".join(METRICS_COLUMNS) + "\n")
        for part in parts:
            lines = Path(part).read_text(encoding="utf-8").splitlines(keepends=True)
            out.writelines(lines[2:])
    return path
