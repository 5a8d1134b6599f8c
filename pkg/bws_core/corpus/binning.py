"""Annual variant counts to binned frequency series."""

from __future__ import annotations

from typing import Optional

import pandas as pd

from bws_core.exceptions import EmptySeriesError
from bws_core.schemas import BinSpec, TimeSeries, UsageScreen, VariantCounts
from bws_core.settings import settings
from bws_core.utils.logger import get_logger

__all__ = [
    "counts_frame",
    "bin_counts",
    "usage_screen",
]

logger = get_logger(__name__)


def counts_frame(counts: VariantCounts) -> pd.DataFrame:
    """Counts as a frame with columns ``year, count_focal, count_other, total``."""
    frame = pd.DataFrame(
        [r.model_dump() for r in counts.rows],
        columns=["year", "count_focal", "count_other"],
    ).sort_values("year", ignore_index=True)
    frame["total"] = frame["count_focal"] + frame["count_other"]
    return frame


def _binned(counts: VariantCounts, spec: BinSpec) -> pd.DataFrame:
    frame = counts_frame(counts)
    if frame.empty:
        return frame.assign(bin=pd.Series(dtype="int64"))
    origin = int(frame["year"].min()) if spec.origin_year is None else spec.origin_year
    frame["bin"] = (frame["year"] - origin) // spec.width_years
    grouped = frame.groupby("bin", sort=True)[["count_focal", "total"]].sum().reset_index()
    grouped["start"] = origin + grouped["bin"] * spec.width_years
    grouped["time"] = grouped["start"] + (spec.width_years - 1) / 2.0
    return grouped


def bin_counts(
    counts: VariantCounts,
    spec: BinSpec,
    min_tokens: Optional[int] = None,
) -> TimeSeries:
    """Frequency of the focal variant per bin, timed at the bin midpoint.

    Bins with fewer than ``min_tokens`` tokens are left out, not zero-filled.
    """
    min_tokens = settings.min_tokens if min_tokens is None else min_tokens
    grouped = _binned(counts, spec)
    kept = grouped[(grouped["total"] >= min_tokens) & (grouped["total"] > 0)]
    dropped = len(grouped) - len(kept)
    if dropped:
        logger.debug(
            "'%s': omitted %d of %d bins below %d tokens",
            counts.word,
            dropped,
            len(grouped),
            min_tokens,
        )
    if kept.empty:
        raise EmptySeriesError(
            f"no {spec.width_years}-year bin of '{counts.word}' reaches {min_tokens} tokens"
        )
    return TimeSeries.from_arrays(
        kept["time"].to_numpy(dtype=float),
        (kept["count_focal"] / kept["total"]).to_numpy(dtype=float),
        kept["total"].to_numpy(dtype="int64"),
        label=counts.word,
    )


def usage_screen(
    counts: VariantCounts,
    width_years: int = 5,
    threshold: float = 0.01,
    origin_year: Optional[int] = None,
) -> UsageScreen:
    """Does the focal variant exceed ``threshold`` usage in at least one bin?"""
    grouped = _binned(counts, BinSpec(width_years=width_years, origin_year=origin_year))
    grouped = grouped[grouped["total"] > 0]
    if grouped.empty:
        return UsageScreen(word=counts.word, max_frequency=0.0, passed=False)
    freq = grouped["count_focal"] / grouped["total"]
    i = int(freq.to_numpy().argmax())
    screen = UsageScreen(
        word=counts.word,
        max_frequency=float(freq.iloc[i]),
        max_bin_start=int(grouped["start"].iloc[i]),
        passed=bool(freq.iloc[i] > threshold),
    )
    logger.info(
        "usage screen '%s': max %.4f in bin from %s -> %s",
        screen.word,
        screen.max_frequency,
        screen.max_bin_start,
        "pass" if screen.passed else "fail",
    )
    return screen
