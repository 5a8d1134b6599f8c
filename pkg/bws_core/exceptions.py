"""Exception hierarchy for bws_core.

Input problems subclass ``ValueError`` as well, so callers that only know
about the builtin keep working.
"""

from __future__ import annotations

__all__ = [
    "BwsError",
    "DomainError",
    "GridError",
    "SizeGuardError",
    "GapAlignmentError",
    "SeriesTooShortError",
    "SegmentTooShortError",
    "EmptySeriesError",
    "MissingTokensError",
    "ContingencyError",
    "ConfigError",
]


class BwsError(Exception):
    """Root of every error raised by this package."""


class DomainError(BwsError, ValueError):
    """A frequency or parameter lies outside its admissible range."""


class GridError(BwsError, ValueError):
    """A frequency is not on the N-grid, or two distributions use different grids."""


class SizeGuardError(BwsError, ValueError):
    """The population size is too large for an exact (N+1)x(N+1) matrix."""


class GapAlignmentError(BwsError, ValueError):
    """An observation gap is not an integer multiple of the generation time."""


class SeriesTooShortError(BwsError, ValueError):
    """A time series has fewer observations than the operation needs."""


class SegmentTooShortError(BwsError, ValueError):
    """A candidate change point leaves too few observations on one side."""


class EmptySeriesError(BwsError, ValueError):
    """Binning or aggregation produced no points."""


class MissingTokensError(BwsError, ValueError):
    """An operation needs token counts that the series does not carry."""


class ContingencyError(BwsError, ValueError):
    """A contingency table has a zero marginal or zero expected count."""


class ConfigError(BwsError, ValueError):
    """A command configuration is inconsistent."""
