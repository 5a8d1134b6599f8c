"""``bws fit``: selection-vs-drift fits over series files or binned counts."""

from __future__ import annotations

from typing import Callable, Iterator, List, Optional, Tuple

import pandas as pd
from pydantic import ValidationError

from bws_core.corpus.binning import bin_counts
from bws_core.exceptions import BwsError
from bws_core.inference.bootstrap import drift_p_value
from bws_core.schemas import BinSpec, FitReport, FitResult, ItemError, TimeSeries, WfParams
from bws_core.schemas.config import FitConfig
from bws_core.scheduler import ReplicatePool
from bws_core.storage.files import read_counts_csv, read_series_csv
from bws_core.utils.logger import get_logger

__all__ = [
    "FIT_COLUMNS",
    "run_fit",
    "fit_results_frame",
    "fit_results_from_frame",
]

logger = get_logger(__name__)

ProgressFactory = Callable[[str], Optional[Callable[[int, int], None]]]

# Column roles follow the per-binning parameter tables
FIT_COLUMNS = [
    "label",
    "bin_width",
    "n_points",
    "popsize_drift",
    "popsize_sel",
    "selstrength",
    "p_value",
    "p_value_raw",
    "lambda",
    "loglik_sel",
    "loglik_drift",
    "exceed_count",
    "replicates",
    "failed_replicates",
    "generation_time",
    "seed",
    "converged",
]

ITEM_ERRORS = (BwsError, OSError, ValidationError, KeyError)


def _items(config: FitConfig) -> Iterator[Tuple[str, Optional[int], Callable[[], TimeSeries]]]:
    for path in config.inputs:
        if not config.counts:
            yield path, None, lambda path=path: read_series_csv(path)
            continue
        for width in config.bin_widths:
            spec = BinSpec(width_years=width, origin_year=config.origin_year)

            def load(path=path, spec=spec) -> TimeSeries:
                return bin_counts(read_counts_csv(path), spec, config.min_tokens)

            yield path, width, load


def run_fit(config: FitConfig, progress: Optional[ProgressFactory] = None) -> FitReport:
    """Fit every input (and every bin width); failures become report errors."""
    pool = ReplicatePool(config.workers)
    report = FitReport(config=config.model_dump(mode="json"))
    for path, width, load in _items(config):
        item = path if width is None else f"{path}@{width}"
        try:
            series = load()
            result = drift_p_value(
                series,
                config.generation_time,
                config.replicates,
                config.seed,
                bootstrap_init=config.bootstrap_init,
                bin_width=width,
                pool=pool,
                progress=progress(f"{series.label} ({item})") if progress else None,
            )
        except ITEM_ERRORS as exc:
            logger.error("fit of %s failed: %s", item, exc)
            report.errors.append(ItemError(item=item, error=str(exc)))
            continue
        report.results.append(result)
    return report


def fit_results_frame(results: List[FitResult]) -> pd.DataFrame:
    rows = [
        {
            "label": r.label,
            "bin_width": r.bin_width,
            "n_points": r.n_points,
            "popsize_drift": r.drift_fit.popsize,
            "popsize_sel": r.sel_fit.popsize,
            "selstrength": r.sel_fit.selstrength,
            "p_value": r.p_value,
            "p_value_raw": r.p_value_raw,
            "lambda": r.likelihood_ratio,
            "loglik_sel": r.loglik_sel,
            "loglik_drift": r.loglik_drift,
            "exceed_count": r.exceed_count,
            "replicates": r.replicates,
            "failed_replicates": r.failed_replicates,
            "generation_time": r.generation_time,
            "seed": r.seed,
            "converged": r.converged,
        }
        for r in results
    ]
    return pd.DataFrame(rows, columns=FIT_COLUMNS)


def _optional(value, cast):
    return None if pd.isna(value) else cast(value)


def fit_results_from_frame(frame: pd.DataFrame) -> List[FitResult]:
    """Inverse of :func:`fit_results_frame`."""
    results = []
    for row in frame.to_dict(orient="records"):
        results.append(
            FitResult(
                label=str(row["label"]),
                bin_width=_optional(row.get("bin_width"), int),
                n_points=int(row.get("n_points", 0)),
                sel_fit=WfParams(popsize=row["popsize_sel"], selstrength=row["selstrength"]),
                drift_fit=WfParams(popsize=row["popsize_drift"], selstrength=0.0),
                loglik_sel=float(row.get("loglik_sel", 0.0)),
                loglik_drift=float(row.get("loglik_drift", 0.0)),
                likelihood_ratio=float(row.get("lambda", 0.0)),
                p_value=_optional(row.get("p_value"), float),
                p_value_raw=_optional(row.get("p_value_raw"), float),
                exceed_count=int(row.get("exceed_count", 0)),
                replicates=int(row.get("replicates", 0)),
                failed_replicates=int(row.get("failed_replicates", 0)),
                generation_time=float(row.get("generation_time", 1.0)),
                seed=int(row.get("seed", 0)),
                converged=bool(row.get("converged", True)),
            )
        )
    return results
