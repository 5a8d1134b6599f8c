"""Exact Wright-Fisher transitions on the N-grid."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.special import gammaln, xlog1py, xlogy

from bws_core.exceptions import DomainError, GridError, SizeGuardError
from bws_core.schemas import WfParams
from bws_core.settings import settings
from bws_core.wf.kernel import clamp_selection, selection_kernel

__all__ = [
    "FrequencyGrid",
    "DiscreteDistribution",
    "binomial_log_pmf",
    "one_step_transition",
    "transition_matrix",
    "exact_k_step_transition",
    "exact_transition_from",
]

_GRID_TOL = 1e-9


@dataclass(frozen=True, slots=True)
class FrequencyGrid:
    """The N + 1 attainable frequencies ``i / N``."""

    popsize_int: int

    def __post_init__(self) -> None:
        if self.popsize_int < 1:
            raise DomainError(f"grid size must be a positive integer, got {self.popsize_int}")

    @property
    def support(self) -> np.ndarray:
        return np.arange(self.popsize_int + 1, dtype=float) / self.popsize_int

    def index_of(self, x: float) -> int:
        """Grid index of frequency ``x``; raises if ``x`` is off the grid."""
        if not 0.0 <= x <= 1.0:
            raise DomainError(f"frequency {x} outside [0, 1]")
        i = int(round(x * self.popsize_int))
        if abs(i - x * self.popsize_int) > _GRID_TOL * max(1, self.popsize_int):
            raise GridError(f"frequency {x} is not on the N={self.popsize_int} grid")
        return i


@dataclass(frozen=True, slots=True)
class DiscreteDistribution:
    """Probability masses over a frequency grid."""

    grid: FrequencyGrid
    mass: np.ndarray

    def __post_init__(self) -> None:
        if self.mass.shape != (self.grid.popsize_int + 1,):
            raise GridError("mass vector does not match the grid")
        if np.any(self.mass < 0) or abs(self.mass.sum() - 1.0) > 1e-9:
            raise DomainError("masses must be nonnegative and sum to 1")

    @classmethod
    def point_mass(cls, grid: FrequencyGrid, x: float) -> "DiscreteDistribution":
        mass = np.zeros(grid.popsize_int + 1)
        mass[grid.index_of(x)] = 1.0
        return cls(grid, mass)

    def mass_at(self, x: float) -> float:
        return float(self.mass[self.grid.index_of(x)])

    def mean(self) -> float:
        return float(self.mass @ self.grid.support)

    def variance(self) -> float:
        support = self.grid.support
        m = self.mass @ support
        return float(self.mass @ (support - m) ** 2)


def binomial_log_pmf(n: int, g: np.ndarray) -> np.ndarray:
    """Log binomial masses for every outcome ``0..n``; one row per entry of ``g``."""
    g = np.atleast_1d(np.asarray(g, dtype=float))[:, None]
    j = np.arange(n + 1, dtype=float)[None, :]
    log_coef = gammaln(n + 1.0) - gammaln(j + 1.0) - gammaln(n - j + 1.0)
    return log_coef + xlogy(j, g) + xlog1py(n - j, -g)


def _integer_popsize(params: WfParams) -> int:
    n = int(round(params.popsize))
    if abs(params.popsize - n) > 1e-9:
        raise DomainError(
            f"the exact model needs an integer population size, got {params.popsize}"
        )
    return n


def _normalised_rows(log_pmf: np.ndarray) -> np.ndarray:
    mass = np.exp(log_pmf)
    return mass / mass.sum(axis=1, keepdims=True)


def one_step_transition(x_t: float, params: WfParams) -> DiscreteDistribution:
    """Binomial distribution of the next generation's frequency."""
    n = _integer_popsize(params)
    grid = FrequencyGrid(n)
    grid.index_of(x_t)
    g = selection_kernel(x_t, params.selstrength)
    return DiscreteDistribution(grid, _normalised_rows(binomial_log_pmf(n, g))[0])


@lru_cache(maxsize=8)
def _cached_matrix(n: int, s: float) -> np.ndarray:
    g = selection_kernel(np.arange(n + 1, dtype=float) / n, s)
    matrix = _normalised_rows(binomial_log_pmf(n, g))
    matrix.setflags(write=False)
    return matrix


def transition_matrix(params: WfParams) -> np.ndarray:
    """Read-only one-generation matrix; row ``i`` starts at frequency ``i / N``."""
    n = _integer_popsize(params)
    if n > settings.max_exact_popsize:
        raise SizeGuardError(
            f"N={n} exceeds the exact-matrix limit of {settings.max_exact_popsize}"
        )
    return _cached_matrix(n, clamp_selection(params.selstrength))


def exact_transition_from(x_0: float, params: WfParams, k: int) -> DiscreteDistribution:
    """Exact distribution after ``k`` generations from any start frequency.

    The first generation is a binomial draw from ``x_0``, which need not lie
    on the grid; the remaining ``k - 1`` apply the transition matrix.
    """
    if k < 1:
        raise DomainError(f"k must be a positive integer, got {k}")
    matrix = transition_matrix(params)
    grid = FrequencyGrid(matrix.shape[0] - 1)
    g = selection_kernel(x_0, params.selstrength)
    mass = _normalised_rows(binomial_log_pmf(grid.popsize_int, g))[0]
    for _ in range(int(k) - 1):
        mass = mass @ matrix
    return DiscreteDistribution(grid, np.clip(mass, 0.0, None))


def exact_k_step_transition(x_0: float, params: WfParams, k: int) -> DiscreteDistribution:
    """Distribution after ``k`` generations from a grid frequency."""
    if k < 1:
        raise DomainError(f"k must be a positive integer, got {k}")
    matrix = transition_matrix(params)
    grid = FrequencyGrid(matrix.shape[0] - 1)
    mass = DiscreteDistribution.point_mass(grid, x_0).mass
    for _ in range(int(k)):
        mass = mass @ matrix
    return DiscreteDistribution(grid, np.clip(mass, 0.0, None))
