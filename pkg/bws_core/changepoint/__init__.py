"""Change points in (N, s): split fits, bootstrap significance and recursion."""

from .detect import change_points, changepoint_p_value, recursive_detect
from .split import SplitFit, admissible_splits, fit_split, scan_split

__all__ = [
    "SplitFit",
    "admissible_splits",
    "fit_split",
    "scan_split",
    "changepoint_p_value",
    "recursive_detect",
    "change_points",
]
