"""Markov likelihood of a frequency time series under the Wright-Fisher model."""

from __future__ import annotations

import math
from typing import Optional

import numpy as np

from bws_core.approx.bws import bws_log_densities
from bws_core.exceptions import SeriesTooShortError
from bws_core.schemas import TimeSeries, WfParams
from bws_core.settings import settings
from bws_core.wf.timing import default_generation_time, generation_steps
from bws_core.wf.transition import FrequencyGrid, exact_k_step_transition

__all__ = [
    "SeriesLikelihood",
    "log_likelihood",
    "exact_log_likelihood",
]


class SeriesLikelihood:
    """Log-likelihood of one series as a function of the parameters.

    The generation counts between observations are worked out once, so the
    object can be evaluated repeatedly by an optimiser.
    """

    def __init__(self, series: TimeSeries, generation_time: Optional[float] = None) -> None:
        if len(series) < 2:
            raise SeriesTooShortError(
                f"series '{series.label}' has {len(series)} point(s); at least 2 are needed"
            )
        self.series = series
        self.generation_time = (
            default_generation_time(series) if generation_time is None else float(generation_time)
        )
        self.steps = generation_steps(series, self.generation_time)
        freqs = series.frequencies
        self.x_from = freqs[:-1]
        self.x_to = freqs[1:]

    def __len__(self) -> int:
        return len(self.steps)

    def terms(self, params: WfParams) -> np.ndarray:
        """Per-transition log densities."""
        return bws_log_densities(self.x_from, self.x_to, params, self.steps)

    def __call__(self, params: WfParams) -> float:
        return float(self.terms(params).sum())

    def at(self, log10_popsize: float, selstrength: float) -> float:
        """Log-likelihood at ``N = 10**log10_popsize``."""
        return self(WfParams(popsize=10.0**log10_popsize, selstrength=selstrength))


def log_likelihood(
    series: TimeSeries,
    params: WfParams,
    generation_time: Optional[float] = None,
) -> float:
    """Sum of BwS log transition densities between consecutive observations."""
    return SeriesLikelihood(series, generation_time)(params)


def exact_log_likelihood(
    series: TimeSeries,
    params: WfParams,
    generation_time: Optional[float] = None,
) -> float:
    """Log-likelihood from the exact transition matrix.

    Interior observations are scaled from grid mass to density (``+ log N``)
    so the value is comparable with :func:`log_likelihood`; observations at
    0 or 1 stay on the mass scale, like the spikes.
    """
    lik = SeriesLikelihood(series, generation_time)
    n = int(round(params.popsize))
    grid = FrequencyGrid(n)
    eps = settings.boundary_eps
    floor = math.log(settings.density_floor)
    total = 0.0
    for x0, x1, k in zip(lik.x_from, lik.x_to, lik.steps):
        dist = exact_k_step_transition(float(x0), params, int(k))
        mass = dist.mass[grid.index_of(float(x1))]
        value = math.log(mass) if mass > 0 else floor
        if eps < x1 < 1.0 - eps:
            value += math.log(n)
        total += max(value, floor)
    return total
