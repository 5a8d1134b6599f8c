"""Two-regime (split) fits of a series at a candidate change time."""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional

import numpy as np

from bws_core.exceptions import DomainError, SegmentTooShortError, SeriesTooShortError
from bws_core.inference.fit import ModelFit, fit
from bws_core.inference.likelihood import SeriesLikelihood
from bws_core.schemas import ChangePointNode, TimeSeries, WfParams
from bws_core.utils.logger import get_logger
from bws_core.wf.timing import default_generation_time

__all__ = [
    "MIN_SEGMENT_POINTS",
    "MIN_SCAN_POINTS",
    "SplitFit",
    "admissible_splits",
    "fit_split",
    "scan_split",
]

logger = get_logger(__name__)

# Observations required strictly on each side of a split
MIN_SEGMENT_POINTS = 3
MIN_SCAN_POINTS = 2 * MIN_SEGMENT_POINTS


@dataclass(frozen=True, slots=True)
class SplitFit:
    split_time: float
    before: ModelFit
    after: ModelFit

    @property
    def loglik(self) -> float:
        return self.before.loglik + self.after.loglik


def admissible_splits(series: TimeSeries) -> List[float]:
    """Midpoints between observations with enough points on both sides."""
    times = series.times
    return [
        0.5 * (times[i] + times[i + 1])
        for i in range(MIN_SEGMENT_POINTS - 1, len(times) - MIN_SEGMENT_POINTS)
    ]


def _left_count(series: TimeSeries, split_time: float) -> int:
    times = series.times
    if np.any(np.isclose(times, split_time, rtol=0.0, atol=1e-12)):
        raise DomainError(f"split time {split_time} coincides with an observation")
    return int(np.sum(times < split_time))


def fit_split(
    series: TimeSeries,
    split_time: float,
    generation_time: Optional[float] = None,
    *,
    start: Optional[WfParams] = None,
) -> SplitFit:
    """Fit separate (N, s) before and after ``split_time``.

    The left chain holds the observations before the split; the right chain
    starts at the last of them, so every transition is scored exactly once.
    Both fits start from ``start`` (normally the constant-model optimum).
    """
    n_left = _left_count(series, split_time)
    n_right = len(series) - n_left
    if n_left < MIN_SEGMENT_POINTS or n_right < MIN_SEGMENT_POINTS:
        raise SegmentTooShortError(
            f"split at {split_time} leaves {n_left} and {n_right} observations; "
            f"at least {MIN_SEGMENT_POINTS} are needed on each side"
        )
    g = default_generation_time(series) if generation_time is None else generation_time
    left = SeriesLikelihood(series.slice(0, n_left), g)
    right = SeriesLikelihood(series.slice(n_left - 1), g)
    if start is None:
        start = fit(SeriesLikelihood(series, g)).params
    return SplitFit(
        split_time=float(split_time),
        before=fit(left, start=start),
        after=fit(right, start=start),
    )


def scan_split(
    series: TimeSeries,
    generation_time: Optional[float] = None,
    *,
    depth: int = 0,
) -> ChangePointNode:
    """Best split over every admissible midpoint, compared with the constant model."""
    if len(series) < MIN_SCAN_POINTS:
        raise SeriesTooShortError(
            f"series '{series.label}' has {len(series)} points; "
            f"a split scan needs at least {MIN_SCAN_POINTS}"
        )
    g = default_generation_time(series) if generation_time is None else generation_time
    constant = fit(SeriesLikelihood(series, g))

    best: Optional[SplitFit] = None
    for split_time in admissible_splits(series):
        candidate = fit_split(series, split_time, g, start=constant.params)
        if best is None or candidate.loglik > best.loglik:
            best = candidate
    assert best is not None

    logger.debug(
        "'%s': best split at %g (loglik %.4f vs constant %.4f)",
        series.label,
        best.split_time,
        best.loglik,
        constant.loglik,
    )
    return ChangePointNode(
        start_time=float(series.points[0].time),
        end_time=float(series.points[-1].time),
        n_points=len(series),
        depth=depth,
        split_time=best.split_time,
        before=best.before.params,
        after=best.after.params,
        constant=constant.params,
        loglik_split=best.loglik,
        loglik_const=constant.loglik,
        likelihood_ratio=2.0 * (best.loglik - constant.loglik),
    )
