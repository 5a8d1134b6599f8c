"""``bws changepoint``: build one series and search it for change points."""

from __future__ import annotations

from typing import Callable, List, Optional, Tuple

import pandas as pd

from bws_core.changepoint.detect import change_points, recursive_detect
from bws_core.corpus.aggregate import aggregate_word_set, equalize_sampling
from bws_core.corpus.binning import bin_counts, usage_screen
from bws_core.exceptions import ConfigError, EmptySeriesError
from bws_core.pipeline.fitting import ITEM_ERRORS
from bws_core.schemas import BinSpec, ChangepointReport, ChangePointRow, ItemError, TimeSeries
from bws_core.schemas.config import ChangepointConfig
from bws_core.scheduler import ReplicatePool
from bws_core.storage.files import read_counts_csv, read_series_csv
from bws_core.storage.manifest import load_word_sets
from bws_core.utils.logger import get_logger

__all__ = [
    "CHANGEPOINT_COLUMNS",
    "build_series",
    "run_changepoint",
    "change_points_frame",
]

logger = get_logger(__name__)

CHANGEPOINT_COLUMNS = [
    "split_time",
    "popsize_before",
    "selstrength_before",
    "popsize_after",
    "selstrength_after",
    "p_value",
    "p_value_raw",
    "depth",
]


def _members(config: ChangepointConfig) -> Tuple[str, List[Tuple[str, str]]]:
    """Label of the run and its ``(word, path)`` members."""
    if config.manifest:
        if not config.word_set:
            raise ConfigError("--word-set is required with --manifest")
        sets = load_word_sets(config.manifest)
        if config.word_set not in sets:
            raise ConfigError(
                f"word set '{config.word_set}' not in manifest (have: {', '.join(sets)})"
            )
        ws = sets[config.word_set]
        return ws.name, [(w, ws.paths[w]) for w in ws.words]
    if not config.inputs:
        raise ConfigError("give input files or a manifest and word set")
    label = config.inputs[0] if len(config.inputs) == 1 else "aggregate"
    return label, [(p, p) for p in config.inputs]


def build_series(config: ChangepointConfig, report: ChangepointReport) -> TimeSeries:
    """Load, bin, equalise and average the members; member failures go to ``report``."""
    label, members = _members(config)
    counts_input = config.counts or config.manifest is not None
    spec = BinSpec(width_years=config.bin_width, origin_year=config.origin_year)

    series_list: List[TimeSeries] = []
    for stream, (word, path) in enumerate(members):
        try:
            if counts_input:
                counts = read_counts_csv(path, word=word)
                report.usage.append(usage_screen(counts))
                series = bin_counts(counts, spec, config.min_tokens)
            else:
                series = read_series_csv(path)
            if config.equalize:
                series = equalize_sampling(series, config.seed, stream=stream)
        except ITEM_ERRORS as exc:
            logger.error("member %s skipped: %s", word, exc)
            report.errors.append(ItemError(item=word, error=str(exc)))
            continue
        series_list.append(series)

    if not series_list:
        raise EmptySeriesError(f"no usable member series for '{label}'")
    if len(series_list) == 1:
        return series_list[0].model_copy(update={"label": label})
    return aggregate_word_set(series_list, label=label, token_weighted=config.token_weighted)


def run_changepoint(
    config: ChangepointConfig,
    progress: Optional[Callable[[int, int], None]] = None,
) -> ChangepointReport:
    report = ChangepointReport(config=config.model_dump(mode="json"))
    try:
        series = build_series(config, report)
        report.label = series.label
        tree = recursive_detect(
            series,
            config.generation_time,
            threshold=config.p_threshold,
            replicates=config.replicates,
            max_depth=config.max_depth,
            seed=config.seed,
            pool=ReplicatePool(config.workers),
            progress=progress,
        )
    except ITEM_ERRORS as exc:
        logger.error("change-point search failed: %s", exc)
        report.errors.append(ItemError(item=report.label or "series", error=str(exc)))
        return report
    report.tree = tree
    report.change_points = change_points(tree)
    return report


def change_points_frame(rows: List[ChangePointRow]) -> pd.DataFrame:
    return pd.DataFrame([r.model_dump() for r in rows], columns=CHANGEPOINT_COLUMNS)
