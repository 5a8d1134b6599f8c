"""Helpers shared by the test modules."""

import numpy as np

from bws_core.schemas import TimeSeries


def series_from_trajectory(traj, every: int = 1, time_unit: float = 1.0, label: str = "") -> TimeSeries:
    """Observe every ``every``-th generation; times are generations times ``time_unit``."""
    idx = np.arange(0, len(traj), every)
    return TimeSeries.from_arrays(idx * time_unit, np.asarray(traj)[idx], label=label)
