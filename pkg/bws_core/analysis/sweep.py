"""Distance of the BwS and normal approximations to the exact transition."""

from __future__ import annotations

from typing import List, Optional, Sequence

import numpy as np

from bws_core.approx.bws import bws_k_step
from bws_core.approx.distance import discretize, statistical_distance
from bws_core.approx.normal import normal_transition
from bws_core.schemas import DistanceRow, WfParams
from bws_core.wf.transition import exact_transition_from

__all__ = [
    "distance_sweep",
]


def distance_sweep(
    popsize: int = 50,
    selstrengths: Sequence[float] = (0.0, 0.5),
    k: int = 1,
    x0_grid: Optional[Sequence[float]] = None,
    grid_points: int = 21,
) -> List[DistanceRow]:
    """Total-variation distances of both approximations at each start frequency.

    The default start grid is ``grid_points`` evenly spaced frequencies in
    [0, 1]; they need not lie on the N-grid.
    """
    if x0_grid is None:
        x0_grid = np.linspace(0.0, 1.0, grid_points)
    rows = []
    for s in selstrengths:
        params = WfParams(popsize=popsize, selstrength=float(s))
        for x0 in x0_grid:
            x0 = float(x0)
            exact = exact_transition_from(x0, params, k)
            bws = discretize(bws_k_step(x0, params, k), exact)
            normal = discretize(normal_transition(x0, params, k), exact)
            rows.append(
                DistanceRow(
                    x0=x0,
                    s=float(s),
                    tv_bws=statistical_distance(bws, exact),
                    tv_normal=statistical_distance(normal, exact),
                )
            )
    return rows
