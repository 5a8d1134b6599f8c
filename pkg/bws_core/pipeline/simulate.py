from __future__ import annotations

import numpy as np
import pandas as pd

from bws_core.schemas.config import SimulateConfig
from bws_core.utils.logger import get_logger
from bws_core.wf.simulate import parse_schedule, simulate_schedule

__all__ = ["run_simulate"]

logger = get_logger(__name__)


def run_simulate(config: SimulateConfig) -> pd.DataFrame:
    """Trajectory as a ``time,frequency`` frame, one row per generation."""
    schedule = (
        parse_schedule(config.schedule)
        if config.schedule
        else [(0, config.selstrength)]
    )
    traj = simulate_schedule(
        config.x0, config.popsize, schedule, config.generations, config.seed
    )
    times = config.start_time + config.generation_time * np.arange(config.generations + 1)
    logger.info(
        "simulated %d generations from x0=%g (N=%g, schedule=%s, seed=%d)",
        config.generations,
        config.x0,
        config.popsize,
        schedule,
        config.seed,
    )
    return pd.DataFrame({"time": times, "frequency": traj})
