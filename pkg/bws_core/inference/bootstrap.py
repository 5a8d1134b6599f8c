"""Parametric-bootstrap test of pure drift."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Sequence, Tuple

from bws_core.exceptions import BwsError
from bws_core.inference.fit import fit_models
from bws_core.inference.likelihood import SeriesLikelihood
from bws_core.schemas import FitResult, TimeSeries, WfParams
from bws_core.schemas.config import BootstrapInit
from bws_core.scheduler import ReplicatePool
from bws_core.settings import settings
from bws_core.utils.logger import get_logger
from bws_core.wf.rng import make_rng
from bws_core.wf.simulate import simulate_like

__all__ = [
    "BootstrapOutcome",
    "empirical_p_value",
    "drift_p_value",
]

logger = get_logger(__name__)

ProgressFn = Callable[[int, int], None]


@dataclass(frozen=True, slots=True)
class BootstrapOutcome:
    p_value: Optional[float]
    p_value_raw: Optional[float]
    exceed_count: int
    replicates: int
    failed_replicates: int


def empirical_p_value(observed: float, statistics: Sequence[Optional[float]]) -> BootstrapOutcome:
    """``(1 + c) / (R + 1)`` and ``c / R`` over the replicates that succeeded.

    ``None`` entries are failed replicates; they are excluded and counted.
    """
    valid = [s for s in statistics if s is not None]
    failed = len(statistics) - len(valid)
    count = sum(1 for s in valid if s >= observed)
    if not valid:
        return BootstrapOutcome(None, None, 0, 0, failed)
    return BootstrapOutcome(
        p_value=(1 + count) / (len(valid) + 1),
        p_value_raw=count / len(valid),
        exceed_count=count,
        replicates=len(valid),
        failed_replicates=failed,
    )


@dataclass(frozen=True, slots=True)
class _DriftReplicate:
    template: TimeSeries
    null: WfParams
    generation_time: float
    init: str
    seed: int
    keys: Tuple[int, ...]


def _run_drift_replicate(task: _DriftReplicate) -> Optional[float]:
    rng = make_rng(task.seed, *task.keys)
    x0 = rng.uniform() if task.init == BootstrapInit.UNIFORM else None
    try:
        synthetic = simulate_like(task.template, task.null, task.generation_time, rng, x0=x0)
        sel, drift = fit_models(synthetic, task.generation_time)
    except BwsError as exc:
        logger.warning("bootstrap replicate %s failed: %s", task.keys, exc)
        return None
    return 2.0 * (sel.loglik - drift.loglik)


def drift_p_value(
    series: TimeSeries,
    generation_time: Optional[float] = None,
    replicates: Optional[int] = None,
    seed: Optional[int] = None,
    *,
    bootstrap_init: str = BootstrapInit.OBSERVED_START,
    bin_width: Optional[int] = None,
    pool: Optional[ReplicatePool] = None,
    progress: Optional[ProgressFn] = None,
) -> FitResult:
    """Fit both models and estimate how often drift alone gives as large a ratio.

    Replicate series are simulated under the drift fit (with its population
    size rounded to an integer) at the observed times, starting from the
    first observation or, with ``bootstrap_init="uniform"``, from a uniform
    draw. Replicate ``i`` draws from ``make_rng(seed, i)``.
    """
    replicates = settings.bootstrap_replicates if replicates is None else int(replicates)
    seed = settings.default_seed if seed is None else int(seed)
    lik = SeriesLikelihood(series, generation_time)
    sel, drift = fit_models(lik)
    raw = 2.0 * (sel.loglik - drift.loglik)
    if raw < 0.0:
        logger.warning(
            "drift fit of '%s' beats the selection fit by %.3g log-likelihood units; "
            "likelihood ratio clamped to 0",
            series.label,
            -0.5 * raw,
        )
    observed = max(0.0, raw)

    null = WfParams(popsize=drift.params.integer_popsize, selstrength=0.0)
    tasks = [
        _DriftReplicate(series, null, lik.generation_time, str(BootstrapInit(bootstrap_init).value), seed, (i,))
        for i in range(replicates)
    ]
    pool = pool if pool is not None else ReplicatePool()
    outcome = empirical_p_value(observed, pool.map(_run_drift_replicate, tasks, progress))
    if outcome.failed_replicates:
        logger.warning(
            "%d of %d bootstrap replicates failed for '%s'",
            outcome.failed_replicates,
            replicates,
            series.label,
        )
    logger.info(
        "fit '%s': N*=%.4g s*=%.4g N0*=%.4g lambda=%.4g p=%s",
        series.label,
        sel.params.popsize,
        sel.params.selstrength,
        drift.params.popsize,
        observed,
        outcome.p_value,
    )
    return FitResult(
        label=series.label,
        bin_width=bin_width,
        n_points=len(series),
        sel_fit=sel.params,
        drift_fit=drift.params,
        loglik_sel=sel.loglik,
        loglik_drift=drift.loglik,
        likelihood_ratio=observed,
        p_value=outcome.p_value,
        p_value_raw=outcome.p_value_raw,
        exceed_count=outcome.exceed_count,
        replicates=outcome.replicates,
        failed_replicates=outcome.failed_replicates,
        generation_time=lik.generation_time,
        seed=seed,
        converged=sel.converged and drift.converged,
    )
