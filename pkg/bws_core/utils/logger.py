import logging
import sys
from pathlib import Path
from typing import Dict, Optional, Union

from bws_core.settings import settings

LOG_FORMAT = "%(asctime)s [%(levelname)s] %(name)s - %(message)s"

LEVEL_NAMES: Dict[str, int] = {
    "DEBUG": logging.DEBUG,
    "INFO": logging.INFO,
    "WARNING": logging.WARNING,
    "ERROR": logging.ERROR,
}

# One logger per name; a second get_logger call must not add a second handler
_loggers: Dict[str, logging.Logger] = {}


def level_from_name(name: str) -> Optional[int]:
    """Numeric level for ``DEBUG``/``INFO``/``WARNING``/``ERROR`` (any case), else None."""
    return LEVEL_NAMES.get(name.strip().upper())


def default_level() -> int:
    return level_from_name(settings.log_level) or logging.INFO


def get_logger(name: str, log_level: Optional[int] = None) -> logging.Logger:
    """
    Return the cached logger ``name``, writing to standard error.

    Standard output is left to command results. The level defaults to
    ``settings.log_level`` (``BWS_LOG_LEVEL``).

    Args:
        name: Logger name, usually ``__name__``
        log_level: Explicit numeric level

    Returns:
        A configured, non-propagating logger
    """
    cached = _loggers.get(name)
    if cached is not None:
        return cached

    level = default_level() if log_level is None else log_level
    logger = logging.getLogger(name)
    logger.setLevel(level)
    if not logger.handlers:
        handler = logging.StreamHandler(sys.stderr)
        handler.setLevel(level)
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        logger.addHandler(handler)
    logger.propagate = False

    _loggers[name] = logger
    return logger


def set_log_level(log_level: int) -> None:
    """Change the level of every logger handed out so far."""
    for logger in _loggers.values():
        logger.setLevel(log_level)
        for handler in logger.handlers:
            handler.setLevel(log_level)


def setup_file_logging(log_file: Union[str, Path], log_level: Optional[int] = None) -> None:
    """
    Mirror every logger created through :func:`get_logger` into ``log_file``.

    Missing parent directories are created.
    """
    path = Path(log_file)
    path.parent.mkdir(parents=True, exist_ok=True)

    file_handler = logging.FileHandler(path, encoding="utf-8")
    file_handler.setLevel(default_level() if log_level is None else log_level)
    file_handler.setFormatter(logging.Formatter(LOG_FORMAT))

    # Ours do not propagate, so the root alone would miss them
    for logger in [*_loggers.values(), logging.getLogger()]:
        logger.addHandler(file_handler)
