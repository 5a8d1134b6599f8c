"""Golden-section line search and coordinate ascent (maximisation)."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence, Tuple

import numpy as np

__all__ = [
    "PHI_RATIO",
    "LineSearchResult",
    "AscentResult",
    "maxgolden",
    "bracketed_maxgolden",
    "coordinate_ascent",
]

PHI_RATIO = 2 / (1 + math.sqrt(5))


@dataclass(frozen=True, slots=True)
class LineSearchResult:
    argmax: float
    maximum: float
    evaluations: int
    converged: bool


@dataclass(frozen=True, slots=True)
class AscentResult:
    x: Tuple[float, ...]
    maximum: float
    sweeps: int
    evaluations: int
    converged: bool


def _safe(f: Callable[[float], float]) -> Callable[[float], float]:
    def wrapped(x: float) -> float:
        value = f(x)
        return -math.inf if math.isnan(value) else value

    return wrapped


def maxgolden(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    tol: float = 1e-4,
    max_iterations: int = 100,
) -> LineSearchResult:
    """Golden-section search for the maximum of ``f`` on ``[lo, hi]``.

    The end points are evaluated too and win if they beat the interior;
    the result is always a point that was actually evaluated.
    """
    f = _safe(f)
    x1 = hi - PHI_RATIO * (hi - lo)
    x2 = lo + PHI_RATIO * (hi - lo)
    f1, f2 = f(x1), f(x2)
    best = max([(f(lo), lo), (f(hi), hi), (f1, x1), (f2, x2)])
    evaluations = 4
    iteration = 0
    while iteration < max_iterations and abs(hi - lo) > tol:
        if f2 < f1:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - PHI_RATIO * (hi - lo)
            f1 = f(x1)
            best = max(best, (f1, x1))
        else:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + PHI_RATIO * (hi - lo)
            f2 = f(x2)
            best = max(best, (f2, x2))
        evaluations += 1
        iteration += 1

    converged = abs(hi - lo) <= tol and math.isfinite(best[0])
    return LineSearchResult(
        argmax=best[1], maximum=best[0], evaluations=evaluations, converged=converged
    )


def bracketed_maxgolden(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    tol: float = 1e-4,
    grid: int = 9,
    max_iterations: int = 100,
) -> LineSearchResult:
    """Coarse scan of ``grid`` points, then golden section around the best one."""
    f = _safe(f)
    xs = np.linspace(lo, hi, grid)
    fs = [f(float(x)) for x in xs]
    i = int(np.argmax(fs))
    refined = maxgolden(
        f,
        float(xs[max(i - 1, 0)]),
        float(xs[min(i + 1, grid - 1)]),
        tol=tol,
        max_iterations=max_iterations,
    )
    evaluations = grid + refined.evaluations
    if fs[i] > refined.maximum:
        return LineSearchResult(float(xs[i]), fs[i], evaluations, refined.converged)
    return LineSearchResult(refined.argmax, refined.maximum, evaluations, refined.converged)


def coordinate_ascent(
    f: Callable[[Sequence[float]], float],
    x0: Sequence[float],
    bounds: Sequence[Tuple[float, float]],
    *,
    order: Optional[Sequence[int]] = None,
    tol: float = 1e-4,
    max_sweeps: int = 50,
    f0: Optional[float] = None,
) -> AscentResult:
    """Maximise ``f`` one coordinate at a time.

    A coordinate only moves when the line search strictly improves on the
    current value, so the returned maximum is never below ``f(x0)``. Stops
    once a full sweep moves no coordinate by ``tol`` or more.
    """
    x = [float(v) for v in x0]
    fx = f(x) if f0 is None else f0
    if math.isnan(fx):
        fx = -math.inf
    evaluations = 0 if f0 is not None else 1
    order = list(range(len(x))) if order is None else list(order)

    for sweep in range(1, max_sweeps + 1):
        largest_move = 0.0
        for j in order:
            def along(v: float, j: int = j) -> float:
                trial = list(x)
                trial[j] = v
                return f(trial)

            lo, hi = bounds[j]
            line = bracketed_maxgolden(along, lo, hi, tol=tol)
            evaluations += line.evaluations
            if line.maximum > fx:
                largest_move = max(largest_move, abs(line.argmax - x[j]))
                x[j] = line.argmax
                fx = line.maximum
        if largest_move < tol:
            return AscentResult(tuple(x), fx, sweep, evaluations, True)

    return AscentResult(tuple(x), fx, max_sweeps, evaluations, False)
