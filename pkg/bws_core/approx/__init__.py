"""Approximate k-generation transitions: Beta-with-Spikes and the normal baseline."""

from .bws import (
    BwsTransition,
    MomentState,
    bws_k_step,
    bws_log_densities,
    bws_log_density,
    moment_match,
    propagate_moments,
    propagate_one_generation,
)
from .distance import discretize, statistical_distance
from .normal import NormalTransition, normal_log_density, normal_transition

__all__ = [
    "MomentState",
    "BwsTransition",
    "moment_match",
    "propagate_one_generation",
    "propagate_moments",
    "bws_k_step",
    "bws_log_density",
    "bws_log_densities",
    "NormalTransition",
    "normal_transition",
    "normal_log_density",
    "discretize",
    "statistical_distance",
]
