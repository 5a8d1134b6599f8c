"""Interfaces (Protocols) for bws_core.

`from bws_core.interfaces import TransitionApproximation`
"""

from .core import ReplicateRunnerInterface, TransitionApproximation

__all__ = [
    "TransitionApproximation",
    "ReplicateRunnerInterface",
]
