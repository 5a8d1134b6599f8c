from __future__ import annotations

import numpy as np

from bws_core.exceptions import GridError
from bws_core.interfaces import TransitionApproximation
from bws_core.wf.transition import DiscreteDistribution

__all__ = [
    "discretize",
    "statistical_distance",
]


def discretize(approx: TransitionApproximation, exact: DiscreteDistribution) -> DiscreteDistribution:
    """Integrate an approximate transition over the cells of ``exact``'s grid."""
    return approx.cell_masses(exact.grid)


def statistical_distance(approx: DiscreteDistribution, exact: DiscreteDistribution) -> float:
    """Total-variation distance between two distributions on the same grid."""
    if approx.grid.popsize_int != exact.grid.popsize_int:
        raise GridError(
            f"grid mismatch: N={approx.grid.popsize_int} vs N={exact.grid.popsize_int}"
        )
    tv = 0.5 * float(np.abs(approx.mass - exact.mass).sum())
    return min(1.0, max(0.0, tv))
