"""
Utility functions and helpers for bws_core.
"""

from bws_core.utils.logger import get_logger, level_from_name, set_log_level, setup_file_logging

__all__ = [
    "get_logger",
    "level_from_name",
    "set_log_level",
    "setup_file_logging",
]
