"""G-test for a contingency table of behaviour classes."""

from __future__ import annotations

import numpy as np
from scipy.special import gammaincc, xlogy

from bws_core.exceptions import ContingencyError
from bws_core.schemas import ContingencyTable, GTestResult
from bws_core.schemas.config import GTestMode

__all__ = [
    "chi2_upper_tail",
    "g_test",
]


def chi2_upper_tail(statistic: float, dof: int) -> float:
    """P(X >= statistic) for a chi-squared variable with ``dof`` degrees of freedom."""
    if statistic <= 0.0:
        return 1.0
    return float(gammaincc(dof / 2.0, statistic / 2.0))


def _expected(observed: np.ndarray, mode: GTestMode):
    if mode is GTestMode.GOODNESS_OF_FIT:
        if observed.shape[0] != 2:
            raise ContingencyError("the goodness-of-fit form compares exactly two rows")
        reference = observed[1]
        if observed[0].sum() == 0 or reference.sum() == 0:
            raise ContingencyError("a row of the table is empty")
        expected = observed[0].sum() * reference / reference.sum()
        return observed[0], expected, observed.shape[1] - 1

    rows = observed.sum(axis=1)
    cols = observed.sum(axis=0)
    if np.any(rows == 0) or np.any(cols == 0):
        raise ContingencyError("the table has an empty row or column")
    expected = np.outer(rows, cols) / observed.sum()
    return observed, expected, (observed.shape[0] - 1) * (observed.shape[1] - 1)


def g_test(table: ContingencyTable, mode: str = GTestMode.GOODNESS_OF_FIT) -> GTestResult:
    """G = 2 sum O ln(O / E) with a chi-squared tail probability.

    ``goodness_of_fit`` (default) tests the first row against the class
    proportions of the second; ``independence`` takes expectations from the
    row and column totals.
    """
    mode = GTestMode(mode)
    counts = np.asarray(table.counts, dtype=float)
    observed, expected, dof = _expected(counts, mode)
    if np.any((expected == 0) & (observed > 0)):
        raise ContingencyError("an observed count has zero expected count")
    with np.errstate(divide="ignore", invalid="ignore"):
        terms = np.where(observed > 0, xlogy(observed, observed / expected), 0.0)
    statistic = max(0.0, 2.0 * float(terms.sum()))
    return GTestResult(
        statistic=statistic,
        dof=int(dof),
        p_value=chi2_upper_tail(statistic, dof),
        mode=mode.value,
        counts=table.counts,
    )
