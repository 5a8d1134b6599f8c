"""Command implementations behind the ``bws`` CLI."""

from .analysis import ellipse_frame, run_ellipses, run_gtest, run_sweep, sweep_frame
from .changepoints import change_points_frame, run_changepoint
from .fitting import fit_results_frame, run_fit
from .simulate import run_simulate

__all__ = [
    "run_simulate",
    "run_fit",
    "fit_results_frame",
    "run_changepoint",
    "change_points_frame",
    "run_ellipses",
    "ellipse_frame",
    "run_gtest",
    "run_sweep",
    "sweep_frame",
]
