from .files import (
    read_counts_csv,
    read_fit_report,
    read_json,
    read_series_csv,
    series_frame,
    write_csv,
    write_json,
)
from .manifest import WordSet, load_word_sets

__all__ = [
    "read_series_csv",
    "series_frame",
    "read_counts_csv",
    "write_csv",
    "write_json",
    "read_json",
    "read_fit_report",
    "WordSet",
    "load_word_sets",
]
