"""Likelihood, maximum-likelihood fits and the bootstrap test of drift."""

from bws_core.wf.timing import default_generation_time, generation_steps

from .bootstrap import BootstrapOutcome, drift_p_value, empirical_p_value
from .fit import ModelFit, ScalingDiagnostic, fit, fit_drift, fit_models, generation_time_scaling
from .likelihood import SeriesLikelihood, exact_log_likelihood, log_likelihood
from .optimizer import coordinate_ascent, maxgolden

__all__ = [
    "SeriesLikelihood",
    "log_likelihood",
    "exact_log_likelihood",
    "ModelFit",
    "ScalingDiagnostic",
    "fit",
    "fit_drift",
    "fit_models",
    "generation_time_scaling",
    "default_generation_time",
    "generation_steps",
    "BootstrapOutcome",
    "empirical_p_value",
    "drift_p_value",
    "maxgolden",
    "coordinate_ascent",
]
