"""Reading inputs and writing reports.

CSV outputs begin with one ``# config: {...}`` line holding the effective run
configuration; every reader here passes ``comment="#"`` so such files load
back unchanged.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path
from typing import Any, Dict, Optional, Type, TypeVar, Union

import pandas as pd
from pydantic import BaseModel

from bws_core.exceptions import ConfigError
from bws_core.schemas import CountRow, FitReport, TimeSeries, VariantCounts

__all__ = [
    "read_series_csv",
    "series_frame",
    "read_counts_csv",
    "write_csv",
    "write_json",
    "read_json",
    "read_fit_report",
]

PathLike = Union[str, Path]
M = TypeVar("M", bound=BaseModel)

SERIES_COLUMNS = ["time", "frequency"]
COUNT_COLUMNS = ["year", "count_focal", "count_other"]


def _require(frame: pd.DataFrame, columns, path: PathLike) -> None:
    missing = [c for c in columns if c not in frame.columns]
    if missing:
        raise ConfigError(f"{path}: missing column(s) {', '.join(missing)}")


def read_series_csv(path: PathLike, label: Optional[str] = None) -> TimeSeries:
    """Series from a ``time,frequency[,tokens]`` CSV, sorted by time."""
    frame = pd.read_csv(path, comment="#")
    _require(frame, SERIES_COLUMNS, path)
    frame = frame.sort_values("time", ignore_index=True)
    tokens = None
    if "tokens" in frame.columns and frame["tokens"].notna().all():
        tokens = frame["tokens"].astype("int64").to_numpy()
    return TimeSeries.from_arrays(
        frame["time"].to_numpy(dtype=float),
        frame["frequency"].to_numpy(dtype=float),
        tokens,
        label=Path(path).stem if label is None else label,
    )


def series_frame(series: TimeSeries) -> pd.DataFrame:
    frame = pd.DataFrame({"time": series.times, "frequency": series.frequencies})
    tokens = series.tokens
    if tokens is not None:
        frame["tokens"] = tokens
    return frame


def read_counts_csv(path: PathLike, word: Optional[str] = None) -> VariantCounts:
    """Counts from a ``year,count_focal,count_other`` CSV (any row order)."""
    frame = pd.read_csv(path, comment="#")
    _require(frame, COUNT_COLUMNS, path)
    rows = [
        CountRow(year=int(r.year), count_focal=int(r.count_focal), count_other=int(r.count_other))
        for r in frame.itertuples(index=False)
    ]
    return VariantCounts(word=Path(path).stem if word is None else word, rows=rows)


def _config_line(config: Optional[Dict[str, Any]]) -> str:
    if config is None:
        return ""
    return "# config: " + json.dumps(config, sort_keys=True, default=str) + "\n"


def write_csv(
    frame: pd.DataFrame,
    path: Optional[PathLike] = None,
    config: Optional[Dict[str, Any]] = None,
    float_format: Optional[str] = None,
) -> str:
    """Write ``frame`` (to ``path`` or standard output) after the config line."""
    text = _config_line(config) + frame.to_csv(index=False, float_format=float_format, lineterminator="\n")
    if path is None:
        sys.stdout.write(text)
    else:
        Path(path).parent.mkdir(parents=True, exist_ok=True)
        Path(path).write_text(text, encoding="utf-8")
    return text


def write_json(model: BaseModel, path: Optional[PathLike] = None) -> str:
    text = model.model_dump_json(indent=2, by_alias=True) + "\n"
    if path is None:
        sys.stdout.write(text)
    else:
        Path(path).parent.mkdir(parents=True, exist_ok=True)
        Path(path).write_text(text, encoding="utf-8")
    return text


def read_json(path: PathLike, model: Type[M]) -> M:
    return model.model_validate_json(Path(path).read_text(encoding="utf-8"))


def read_fit_report(path: PathLike) -> FitReport:
    """Fit report from JSON, or from the CSV written by ``bws fit --format csv``."""
    if str(path).endswith(".json"):
        return read_json(path, FitReport)
    from bws_core.pipeline.fitting import fit_results_from_frame

    return FitReport(results=fit_results_from_frame(pd.read_csv(path, comment="#")))
