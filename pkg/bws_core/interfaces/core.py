"""Protocols shared across bws_core components."""

from __future__ import annotations

from typing import TYPE_CHECKING, Callable, List, Optional, Protocol, Sequence, TypeVar, runtime_checkable

if TYPE_CHECKING:
    from bws_core.wf.transition import DiscreteDistribution, FrequencyGrid

T = TypeVar("T")
R = TypeVar("R")


@runtime_checkable
class TransitionApproximation(Protocol):
    """A continuous approximation to a Wright-Fisher transition."""

    def log_density(self, x):
        """Log density (or spike mass at 0 and 1) at frequency ``x``."""
        ...

    def cell_masses(self, grid: "FrequencyGrid") -> "DiscreteDistribution":
        """Probability of each cell of ``grid``."""
        ...


@runtime_checkable
class ReplicateRunnerInterface(Protocol):
    """Maps a function over independent replicate tasks, preserving task order."""

    def map(
        self,
        fn: Callable[[T], R],
        tasks: Sequence[T],
        progress: Optional[Callable[[int, int], None]] = None,
    ) -> List[R]:
        ...
