"""Beta-with-Spikes approximation of the k-generation transition.

The state after each generation is summarised by the extinction and fixation
masses ``p0`` and ``p1`` and by the mean and variance of the frequency
conditioned on neither having happened. The next generation's state is
computed exactly for a Beta density matched to those moments, with the
expectations over the Beta taken by Gauss-Legendre quadrature in the Beta's
CDF coordinate.

All propagation is vectorised over a batch of transitions so a whole series
is scored with one call per generation.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Tuple

import numpy as np
from scipy.special import betainc, betaincinv, betaln, ndtri, xlog1py, xlogy

from bws_core.exceptions import DomainError
from bws_core.schemas import WfParams
from bws_core.settings import settings
from bws_core.utils.logger import get_logger
from bws_core.wf.kernel import clamp_selection
from bws_core.wf.transition import DiscreteDistribution, FrequencyGrid

__all__ = [
    "MomentState",
    "BwsTransition",
    "moment_match",
    "propagate_one_generation",
    "propagate_moments",
    "bws_k_step",
    "bws_log_density",
    "bws_log_densities",
]

logger = get_logger(__name__)

ABSORBED_WEIGHT = 1e-12
MAX_CONCENTRATION = 1e8
# Above this alpha + beta the Beta quantiles are taken from the matching Gaussian
GAUSSIAN_SWITCH = 1e6


@lru_cache(maxsize=8)
def _quadrature(nodes: int) -> Tuple[np.ndarray, np.ndarray]:
    t, w = np.polynomial.legendre.leggauss(nodes)
    return (t + 1.0) / 2.0, w / 2.0


def moment_match(mean, variance):
    """Beta shape parameters with the given mean and variance.

    The variance is clamped just below ``m(1 - m)`` and the concentration
    ``alpha + beta`` is capped, so near-point masses stay quadrature-safe.
    """
    m = np.asarray(mean, dtype=float)
    limit = m * (1.0 - m)
    v = np.minimum(np.asarray(variance, dtype=float), limit * (1.0 - 1e-9))
    with np.errstate(divide="ignore", invalid="ignore"):
        nu = np.where(v > 0, limit / v - 1.0, MAX_CONCENTRATION)
    nu = np.minimum(nu, MAX_CONCENTRATION)
    return m * nu, (1.0 - m) * nu


# ---------------------------------------------------------------------------
# Data types ---------------------------------------------------------------
# ---------------------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class MomentState:
    """Absorption masses plus the conditional moments of the interior component.

    ``variance == 0`` denotes a point mass at ``mean``.
    """

    p0: float
    p1: float
    mean: float
    variance: float

    def __post_init__(self) -> None:
        if self.p0 < -1e-15 or self.p1 < -1e-15 or self.p0 + self.p1 > 1.0 + 1e-12:
            raise DomainError(f"invalid absorption masses p0={self.p0}, p1={self.p1}")
        if not 0.0 <= self.mean <= 1.0:
            raise DomainError(f"mean {self.mean} outside [0, 1]")
        if self.variance < 0.0 or (
            self.variance > 0.0 and self.variance >= self.mean * (1.0 - self.mean)
        ):
            raise DomainError(
                f"variance {self.variance} is not below m(1-m) for mean {self.mean}"
            )

    @classmethod
    def point_mass(cls, x0: float) -> "MomentState":
        if not 0.0 <= x0 <= 1.0:
            raise DomainError(f"frequency {x0} outside [0, 1]")
        eps = settings.boundary_eps
        if x0 <= eps:
            return cls(p0=1.0, p1=0.0, mean=0.0, variance=0.0)
        if x0 >= 1.0 - eps:
            return cls(p0=0.0, p1=1.0, mean=1.0, variance=0.0)
        return cls(p0=0.0, p1=0.0, mean=float(x0), variance=0.0)

    @property
    def interior_weight(self) -> float:
        return max(0.0, 1.0 - self.p0 - self.p1)

    @property
    def absorbed(self) -> bool:
        return self.interior_weight < ABSORBED_WEIGHT

    def total_mean(self) -> float:
        return self.p1 + self.interior_weight * self.mean

    def total_variance(self) -> float:
        w = self.interior_weight
        second = self.p1 + w * (self.variance + self.mean**2)
        return max(0.0, second - self.total_mean() ** 2)


@dataclass(frozen=True, slots=True)
class BwsTransition:
    """Spikes at 0 and 1 plus a weighted Beta density on (0, 1)."""

    p0: float
    p1: float
    alpha: float
    beta_param: float
    k: int

    def __post_init__(self) -> None:
        if self.p0 < 0.0 or self.p1 < 0.0 or self.p0 + self.p1 > 1.0 + 1e-12:
            raise DomainError(f"invalid spike masses p0={self.p0}, p1={self.p1}")
        if not (self.alpha > 0.0 and self.beta_param > 0.0):
            raise DomainError("Beta shape parameters must be positive")
        if self.k < 1:
            raise DomainError(f"k must be a positive integer, got {self.k}")

    @property
    def interior_weight(self) -> float:
        return max(0.0, 1.0 - self.p0 - self.p1)

    def mean(self) -> float:
        m = self.alpha / (self.alpha + self.beta_param)
        return self.p1 + self.interior_weight * m

    def log_density(self, x):
        return _log_density(
            np.asarray(self.p0),
            np.asarray(self.p1),
            np.asarray(self.alpha),
            np.asarray(self.beta_param),
            np.asarray(x, dtype=float),
        )

    def cell_masses(self, grid: FrequencyGrid) -> DiscreteDistribution:
        """Probability of each grid cell; the spikes fall in the end cells."""
        n = grid.popsize_int
        edges = (np.arange(n) + 0.5) / n
        cdf = np.concatenate([[0.0], betainc(self.alpha, self.beta_param, edges), [1.0]])
        mass = self.interior_weight * np.diff(cdf)
        mass[0] += self.p0
        mass[-1] += self.p1
        mass = np.clip(mass, 0.0, None)
        return DiscreteDistribution(grid, mass / mass.sum())


# ---------------------------------------------------------------------------
# Propagation ----------------------------------------------------------------
# ---------------------------------------------------------------------------

def _quadrature_points(m: np.ndarray, v: np.ndarray, u: np.ndarray) -> np.ndarray:
    """Beta quantiles at the CDF nodes ``u``; one row per state."""
    x = np.repeat(m[:, None], u.size, axis=1)
    spread = v > 0
    if np.any(spread):
        ms, vs = m[spread], v[spread]
        a, b = moment_match(ms, vs)
        gaussian = (a + b) > GAUSSIAN_SWITCH
        xs = np.empty((ms.size, u.size))
        if np.any(~gaussian):
            xs[~gaussian] = betaincinv(a[~gaussian, None], b[~gaussian, None], u[None, :])
        if np.any(gaussian):
            sd = np.sqrt(vs[gaussian])
            xs[gaussian] = ms[gaussian, None] + sd[:, None] * ndtri(u)[None, :]
        x[spread] = np.clip(xs, 0.0, 1.0)
    return x


def _advance(p0, p1, m, v, n: float, s: float, nodes: int):
    """One generation for every state in the batch; absorbed states are left alone."""
    u, wq = _quadrature(nodes)
    w = 1.0 - p0 - p1
    live = w >= ABSORBED_WEIGHT
    if not np.any(live):
        return p0, p1, m, v

    x = _quadrature_points(m[live], v[live], u)
    g = x / (x + (1.0 - x) * np.exp(-s))
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        log_g = np.log(g)
        log_h = np.log1p(-g)
        e1 = np.exp(n * log_g)
        e0 = np.exp(n * log_h)
        # Interior mass 1 - (1-g)^N - g^N without cancellation at either end
        q = np.where(g > 0.5, -np.expm1(n * log_g) - e0, -np.expm1(n * log_h) - e1)
        first = g * -np.expm1(xlogy(n - 1.0, g))
        second = g * g + g * (1.0 - g) / n - e1
    q = np.clip(q, 0.0, None)
    first = np.clip(first, 0.0, None)
    second = np.clip(second, 0.0, None)

    wl = w[live]
    interior = q @ wq
    p0_new, p1_new = p0.copy(), p1.copy()
    m_new, v_new = m.copy(), v.copy()
    p0_new[live] = p0[live] + wl * (e0 @ wq)
    p1_new[live] = p1[live] + wl * (e1 @ wq)

    ok = wl * interior >= ABSORBED_WEIGHT
    with np.errstate(divide="ignore", invalid="ignore"):
        mean = np.where(ok, (first @ wq) / interior, m[live])
        var = np.where(ok, (second @ wq) / interior - mean**2, 0.0)
    mean = np.clip(mean, 0.0, 1.0)
    var = np.clip(var, 0.0, mean * (1.0 - mean) * (1.0 - 1e-9))
    m_new[live] = mean
    v_new[live] = var
    return p0_new, p1_new, m_new, v_new


def _propagate(x0: np.ndarray, params: WfParams, ks: np.ndarray):
    """Moments after ``ks[i]`` generations from point masses at ``x0[i]``."""
    x0 = np.asarray(x0, dtype=float)
    ks = np.asarray(ks, dtype=np.int64)
    if np.any(x0 < 0.0) or np.any(x0 > 1.0):
        raise DomainError("frequencies must lie in [0, 1]")
    if np.any(ks < 1):
        raise DomainError("generation counts must be positive integers")
    eps = settings.boundary_eps
    p0 = np.where(x0 <= eps, 1.0, 0.0)
    p1 = np.where(x0 >= 1.0 - eps, 1.0, 0.0)
    m = x0.copy()
    v = np.zeros_like(x0)
    n = float(params.popsize)
    s = clamp_selection(params.selstrength)
    nodes = settings.quadrature_nodes

    for step in range(int(ks.max(initial=0))):
        active = ks > step
        if np.all(active):
            p0, p1, m, v = _advance(p0, p1, m, v, n, s, nodes)
        else:
            a = _advance(p0[active], p1[active], m[active], v[active], n, s, nodes)
            p0[active], p1[active], m[active], v[active] = a
    return p0, p1, m, v


def propagate_one_generation(state: MomentState, params: WfParams) -> MomentState:
    """Advance a moment state by one generation; absorbed states come back unchanged."""
    if state.absorbed:
        logger.debug("state fully absorbed (p0=%.3g, p1=%.3g)", state.p0, state.p1)
        return state
    p0, p1, m, v = _advance(
        np.array([state.p0]),
        np.array([state.p1]),
        np.array([state.mean]),
        np.array([state.variance]),
        float(params.popsize),
        clamp_selection(params.selstrength),
        settings.quadrature_nodes,
    )
    return MomentState(p0=float(p0[0]), p1=float(p1[0]), mean=float(m[0]), variance=float(v[0]))


def propagate_moments(x_0: float, params: WfParams, k: int) -> MomentState:
    """Moment state ``k`` generations after a point mass at ``x_0``."""
    p0, p1, m, v = _propagate(np.array([x_0]), params, np.array([k]))
    return MomentState(p0=float(p0[0]), p1=float(p1[0]), mean=float(m[0]), variance=float(v[0]))


def bws_k_step(x_0: float, params: WfParams, k: int) -> BwsTransition:
    """Beta-with-Spikes transition ``k`` generations from ``x_0``."""
    state = propagate_moments(x_0, params, k)
    if state.absorbed:
        # The Beta component carries no mass; any valid shape will do
        alpha, beta_param = 1.0, 1.0
    else:
        a, b = moment_match(state.mean, state.variance)
        alpha, beta_param = float(a), float(b)
    return BwsTransition(
        p0=min(1.0, state.p0), p1=min(1.0, state.p1), alpha=alpha, beta_param=beta_param, k=int(k)
    )


# ---------------------------------------------------------------------------
# Densities ----------------------------------------------------------------
# ---------------------------------------------------------------------------

def _log_density(p0, p1, alpha, beta_param, x) -> np.ndarray:
    eps = settings.boundary_eps
    floor = np.log(settings.density_floor)
    if np.any(x < 0.0) or np.any(x > 1.0):
        raise DomainError("frequencies must lie in [0, 1]")
    w = np.clip(1.0 - p0 - p1, 0.0, None)
    xi = np.clip(x, eps, 1.0 - eps)
    with np.errstate(divide="ignore", invalid="ignore"):
        interior = (
            np.log(w)
            + xlogy(alpha - 1.0, xi)
            + xlog1py(beta_param - 1.0, -xi)
            - betaln(alpha, beta_param)
        )
        out = np.where(
            x <= eps, np.log(p0), np.where(x >= 1.0 - eps, np.log(p1), interior)
        )
    out = np.where(np.isnan(out), floor, out)
    out = np.maximum(out, floor)
    return out if out.ndim else float(out)


def bws_log_density(trans: BwsTransition, x: float) -> float:
    """Log density of ``trans`` at ``x``; observations at 0 or 1 read the spikes."""
    return trans.log_density(x)


def bws_log_densities(x_from, x_to, params: WfParams, ks) -> np.ndarray:
    """Log transition densities for a batch of (start, end, generations) triples."""
    p0, p1, m, v = _propagate(x_from, params, ks)
    live = (1.0 - p0 - p1) >= ABSORBED_WEIGHT
    alpha, beta_param = moment_match(np.where(live, m, 0.5), np.where(live, v, 0.0))
    return np.atleast_1d(
        _log_density(p0, p1, alpha, beta_param, np.asarray(x_to, dtype=float))
    )
