"""Ellipses, region classes, G-test and approximation sweeps."""

from .ellipse import classify_region, ellipse_from_fits
from .gtest import chi2_upper_tail, g_test
from .sweep import distance_sweep

__all__ = [
    "ellipse_from_fits",
    "classify_region",
    "g_test",
    "chi2_upper_tail",
    "distance_sweep",
]
