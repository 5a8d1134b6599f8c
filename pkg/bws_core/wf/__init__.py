"""Exact Wright-Fisher model with selection."""

from .kernel import clamp_selection, selection_kernel
from .rng import make_rng
from .simulate import parse_schedule, simulate_like, simulate_schedule, simulate_trajectory
from .timing import default_generation_time, generation_steps
from .transition import (
    DiscreteDistribution,
    FrequencyGrid,
    binomial_log_pmf,
    exact_k_step_transition,
    exact_transition_from,
    one_step_transition,
    transition_matrix,
)

__all__ = [
    "clamp_selection",
    "selection_kernel",
    "make_rng",
    "FrequencyGrid",
    "DiscreteDistribution",
    "binomial_log_pmf",
    "one_step_transition",
    "transition_matrix",
    "exact_k_step_transition",
    "exact_transition_from",
    "simulate_trajectory",
    "simulate_schedule",
    "simulate_like",
    "parse_schedule",
    "default_generation_time",
    "generation_steps",
]
