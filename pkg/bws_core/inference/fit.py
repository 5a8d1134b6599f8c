"""Maximum-likelihood fits of the selection and drift models."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Tuple, Union

from bws_core.inference.likelihood import SeriesLikelihood
from bws_core.inference.optimizer import bracketed_maxgolden, coordinate_ascent
from bws_core.schemas import TimeSeries, WfParams
from bws_core.settings import settings
from bws_core.utils.logger import get_logger

__all__ = [
    "ModelFit",
    "ScalingDiagnostic",
    "fit",
    "fit_drift",
    "fit_models",
    "generation_time_scaling",
]

logger = get_logger(__name__)

SeriesOrLikelihood = Union[TimeSeries, SeriesLikelihood]


@dataclass(frozen=True, slots=True)
class ModelFit:
    """Best parameters found and the log-likelihood there."""

    params: WfParams
    loglik: float
    converged: bool = True
    evaluations: int = 0


@dataclass(frozen=True, slots=True)
class ScalingDiagnostic:
    """Ratios of fitted parameters when the generation time is doubled."""

    selstrength_ratio: float
    popsize_ratio: float
    fine: ModelFit
    coarse: ModelFit


def _likelihood(series: SeriesOrLikelihood, generation_time: Optional[float]) -> SeriesLikelihood:
    if isinstance(series, SeriesLikelihood):
        return series
    return SeriesLikelihood(series, generation_time)


def _bounds() -> Tuple[Tuple[float, float], Tuple[float, float]]:
    return (
        (settings.log10_popsize_min, settings.log10_popsize_max),
        (-settings.selection_bound, settings.selection_bound),
    )


def fit_drift(series: SeriesOrLikelihood, generation_time: Optional[float] = None) -> ModelFit:
    """Best population size with the selection strength pinned to 0."""
    lik = _likelihood(series, generation_time)
    (lo, hi), _ = _bounds()
    line = bracketed_maxgolden(lambda lg: lik.at(lg, 0.0), lo, hi, tol=settings.optimizer_tol)
    if not line.converged:
        logger.warning("drift fit of '%s' did not converge", lik.series.label)
    return ModelFit(
        params=WfParams(popsize=10.0**line.argmax, selstrength=0.0),
        loglik=line.maximum,
        converged=line.converged,
        evaluations=line.evaluations,
    )


def fit(
    series: SeriesOrLikelihood,
    generation_time: Optional[float] = None,
    *,
    start: Optional[WfParams] = None,
    drift: Optional[ModelFit] = None,
) -> ModelFit:
    """Best (N, s) by coordinate ascent over log10 N and s.

    Without ``start`` the search begins at the drift optimum and moves ``s``
    first, so the result never has a lower likelihood than the drift fit.
    """
    lik = _likelihood(series, generation_time)
    bounds = _bounds()
    if start is None:
        drift = drift if drift is not None else fit_drift(lik)
        start, f0, order = drift.params, drift.loglik, (1, 0)
    else:
        f0, order = None, (0, 1)

    (nlo, nhi), (slo, shi) = bounds
    x0 = (
        min(max(math.log10(start.popsize), nlo), nhi),
        min(max(start.selstrength, slo), shi),
    )
    result = coordinate_ascent(
        lambda v: lik.at(v[0], v[1]),
        x0,
        bounds,
        order=order,
        tol=settings.optimizer_tol,
        max_sweeps=settings.max_sweeps,
        f0=f0,
    )
    if not result.converged:
        logger.warning(
            "selection fit of '%s' stopped after %d sweeps without converging",
            lik.series.label,
            result.sweeps,
        )
    return ModelFit(
        params=WfParams(popsize=10.0 ** result.x[0], selstrength=result.x[1]),
        loglik=result.maximum,
        converged=result.converged,
        evaluations=result.evaluations,
    )


def fit_models(
    series: SeriesOrLikelihood, generation_time: Optional[float] = None
) -> Tuple[ModelFit, ModelFit]:
    """Selection and drift fits of one series, as ``(selection, drift)``."""
    lik = _likelihood(series, generation_time)
    drift = fit_drift(lik)
    return fit(lik, drift=drift), drift


def generation_time_scaling(
    series: TimeSeries, generation_time: Optional[float] = None
) -> ScalingDiagnostic:
    """Refit with twice the generation time and report the parameter ratios.

    Fitted ``s`` should roughly double and ``N`` roughly halve; every gap must
    be a whole multiple of the doubled generation time.
    """
    fine_lik = SeriesLikelihood(series, generation_time)
    coarse_lik = SeriesLikelihood(series, 2.0 * fine_lik.generation_time)
    fine = fit(fine_lik)
    coarse = fit(coarse_lik)
    s_ratio = (
        coarse.params.selstrength / fine.params.selstrength
        if fine.params.selstrength != 0
        else math.nan
    )
    return ScalingDiagnostic(
        selstrength_ratio=s_ratio,
        popsize_ratio=coarse.params.popsize / fine.params.popsize,
        fine=fine,
        coarse=coarse,
    )
