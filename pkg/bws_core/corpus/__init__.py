"""Corpus counts to frequency series."""

from .aggregate import aggregate_word_set, equalize_sampling
from .binning import bin_counts, counts_frame, usage_screen

__all__ = [
    "bin_counts",
    "counts_frame",
    "usage_screen",
    "aggregate_word_set",
    "equalize_sampling",
]
