"""Gaussian transition with the same propagated mean and variance as the BwS."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import ndtr

from bws_core.approx.bws import propagate_moments
from bws_core.exceptions import DomainError
from bws_core.schemas import WfParams
from bws_core.settings import settings
from bws_core.wf.transition import DiscreteDistribution, FrequencyGrid

__all__ = [
    "NormalTransition",
    "normal_transition",
    "normal_log_density",
]


@dataclass(frozen=True, slots=True)
class NormalTransition:
    """Normal density; ``variance == 0`` is a point mass at ``mean``."""

    mean: float
    variance: float
    k: int

    def __post_init__(self) -> None:
        if self.variance < 0.0:
            raise DomainError(f"variance must be nonnegative, got {self.variance}")

    def log_density(self, x):
        x = np.asarray(x, dtype=float)
        floor = math.log(settings.density_floor)
        if self.variance == 0.0:
            hit = np.abs(x - self.mean) <= settings.boundary_eps
            out = np.where(hit, 0.0, floor)
        else:
            out = -0.5 * (np.log(2.0 * np.pi * self.variance) + (x - self.mean) ** 2 / self.variance)
            out = np.maximum(out, floor)
        return out if out.ndim else float(out)

    def cell_masses(self, grid: FrequencyGrid) -> DiscreteDistribution:
        """Probability of each grid cell; the tails beyond [0, 1] fall in the end cells."""
        n = grid.popsize_int
        mass = np.zeros(n + 1)
        if self.variance == 0.0:
            mass[int(np.clip(round(self.mean * n), 0, n))] = 1.0
            return DiscreteDistribution(grid, mass)
        edges = (np.arange(n) + 0.5) / n
        cdf = ndtr((edges - self.mean) / math.sqrt(self.variance))
        mass = np.diff(np.concatenate([[0.0], cdf, [1.0]]))
        mass = np.clip(mass, 0.0, None)
        return DiscreteDistribution(grid, mass / mass.sum())


def normal_transition(x_0: float, params: WfParams, k: int) -> NormalTransition:
    state = propagate_moments(x_0, params, k)
    return NormalTransition(mean=state.total_mean(), variance=state.total_variance(), k=int(k))


def normal_log_density(x_0: float, params: WfParams, k: int, x: float) -> float:
    """Log density at ``x`` of the normal approximation to the k-step transition."""
    if not 0.0 <= x <= 1.0:
        raise DomainError(f"frequency {x} outside [0, 1]")
    return normal_transition(x_0, params, k).log_density(x)
