from __future__ import annotations

from typing import Union

import numpy as np

from bws_core.exceptions import DomainError
from bws_core.settings import settings

__all__ = [
    "clamp_selection",
    "selection_kernel",
]

ArrayLike = Union[float, np.ndarray]


def clamp_selection(s: float) -> float:
    """Clamp a selection strength to the admissible range."""
    if not np.isfinite(s):
        raise DomainError(f"selection strength must be finite, got {s}")
    bound = settings.selection_bound
    return float(min(max(s, -bound), bound))


def selection_kernel(x: ArrayLike, s: float) -> ArrayLike:
    """Expected next-generation frequency of a variant at frequency ``x``.

    Evaluated as ``x / (x + (1 - x) e^{-s})`` so that 0 and 1 map to
    themselves exactly.
    """
    arr = np.asarray(x, dtype=float)
    if np.any(~np.isfinite(arr)) or np.any(arr < 0.0) or np.any(arr > 1.0):
        raise DomainError("frequencies must lie in [0, 1]")
    s = clamp_selection(s)
    g = arr / (arr + (1.0 - arr) * np.exp(-s))
    if g.ndim == 0:
        return float(g)
    return g
