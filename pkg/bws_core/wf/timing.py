"""Mapping between observation times and Wright-Fisher generations."""

from __future__ import annotations

import numpy as np

from bws_core.exceptions import GapAlignmentError, SeriesTooShortError
from bws_core.schemas import TimeSeries

__all__ = [
    "default_generation_time",
    "generation_steps",
]

_GAP_RTOL = 1e-6


def default_generation_time(series: TimeSeries) -> float:
    """Shortest gap between successive observations."""
    if len(series) < 2:
        raise SeriesTooShortError("at least 2 observations are needed")
    return float(np.min(np.diff(series.times)))


def generation_steps(series: TimeSeries, generation_time: float) -> np.ndarray:
    """Whole number of generations elapsed across each observation gap."""
    if generation_time <= 0:
        raise GapAlignmentError(f"generation time must be positive, got {generation_time}")
    if len(series) < 2:
        raise SeriesTooShortError("at least 2 observations are needed")
    ratio = np.diff(series.times) / generation_time
    steps = np.rint(ratio)
    bad = (steps < 1) | (np.abs(ratio - steps) > _GAP_RTOL * np.maximum(ratio, 1.0))
    if np.any(bad):
        i = int(np.argmax(bad))
        raise GapAlignmentError(
            f"gap {series.times[i + 1] - series.times[i]:g} after t={series.times[i]:g} "
            f"is not a whole multiple of the generation time {generation_time:g}; "
            "re-bin the data or choose another generation time"
        )
    return steps.astype(np.int64)
