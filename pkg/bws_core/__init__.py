"""Wright-Fisher inference with the Beta-with-Spikes transition approximation.

Fits population size and selection strength to frequency time series,
tests for selection with a parametric bootstrap and searches for change
points in both parameters.
"""

__version__ = "0.1.0"

from bws_core.schemas import TimeSeries, WfParams
from bws_core.settings import settings

__all__ = ["__version__", "TimeSeries", "WfParams", "settings"]
