"""Binomial resampling of Wright-Fisher trajectories."""

from __future__ import annotations

from typing import List, Optional, Sequence, Tuple

import numpy as np

from bws_core.exceptions import ConfigError, DomainError
from bws_core.schemas import TimeSeries, WfParams
from bws_core.wf.kernel import selection_kernel
from bws_core.wf.rng import make_rng
from bws_core.wf.timing import generation_steps

__all__ = [
    "simulate_trajectory",
    "simulate_schedule",
    "simulate_like",
    "parse_schedule",
]

Schedule = Sequence[Tuple[int, float]]


def _check_start(x0: float) -> None:
    if not 0.0 <= x0 <= 1.0:
        raise DomainError(f"initial frequency {x0} outside [0, 1]")


def _step(x: float, n: int, s: float, rng: np.random.Generator) -> float:
    return rng.binomial(n, selection_kernel(x, s)) / n


def simulate_trajectory(
    x_0: float,
    params: WfParams,
    generations: int,
    seed: Optional[int] = None,
    *,
    rng: Optional[np.random.Generator] = None,
) -> np.ndarray:
    """Frequencies at generations ``0..generations``; entry 0 is ``x_0``."""
    return simulate_schedule(
        x_0, params.popsize, [(0, params.selstrength)], generations, seed, rng=rng
    )


def simulate_schedule(
    x_0: float,
    popsize: float,
    schedule: Schedule,
    generations: int,
    seed: Optional[int] = None,
    *,
    rng: Optional[np.random.Generator] = None,
) -> np.ndarray:
    """Trajectory under a piecewise-constant selection strength.

    ``schedule`` lists ``(start_generation, s)`` pairs; generation ``t`` uses
    the last entry whose start is ``<= t``.
    """
    _check_start(x_0)
    if generations < 1:
        raise DomainError(f"generations must be positive, got {generations}")
    if not schedule or schedule[0][0] != 0:
        raise ConfigError("a selection schedule must start at generation 0")
    if rng is None:
        rng = make_rng(0 if seed is None else seed)
    n = WfParams(popsize=popsize).integer_popsize
    starts = [int(g) for g, _ in schedule]
    if starts != sorted(set(starts)):
        raise ConfigError("schedule start generations must be strictly increasing")

    traj = np.empty(generations + 1)
    traj[0] = x_0
    regime = 0
    for t in range(generations):
        while regime + 1 < len(schedule) and starts[regime + 1] <= t:
            regime += 1
        traj[t + 1] = _step(traj[t], n, float(schedule[regime][1]), rng)
    return traj


def parse_schedule(text: str) -> List[Tuple[int, float]]:
    """Parse ``"0:+0.2,100:-0.2"`` into ``[(0, 0.2), (100, -0.2)]``."""
    schedule = []
    for chunk in text.replace("−", "-").split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        try:
            start, s = chunk.split(":")
            schedule.append((int(start), float(s)))
        except ValueError as exc:
            raise ConfigError(f"bad schedule entry '{chunk}'; expected GEN:S") from exc
    if not schedule:
        raise ConfigError("empty selection schedule")
    return schedule


def simulate_like(
    template: TimeSeries,
    params: WfParams,
    generation_time: float,
    rng: np.random.Generator,
    x0: Optional[float] = None,
) -> TimeSeries:
    """Simulate a series observed at the template's times.

    Starts at the template's first frequency unless ``x0`` is given.
    """
    steps = generation_steps(template, generation_time)
    start = template.points[0].frequency if x0 is None else x0
    traj = simulate_trajectory(start, params, int(steps.sum()), rng=rng)
    observed = traj[np.concatenate([[0], np.cumsum(steps)])]
    return TimeSeries.from_arrays(template.times, observed, label=template.label)
