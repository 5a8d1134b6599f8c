from __future__ import annotations

"""ReplicatePool – ordered map over independent bootstrap replicates.

With one worker the tasks run in-process; otherwise they are spread over a
process pool. Either way results come back in task order, so a run's output
never depends on completion order::

    pool = ReplicatePool(workers=4)
    stats = pool.map(run_replicate, tasks, progress=report)

``fn`` and the tasks must be picklable when ``workers > 1``.
"""

from concurrent.futures import ProcessPoolExecutor, as_completed
from typing import Callable, List, Optional, Sequence, TypeVar

from bws_core.interfaces import ReplicateRunnerInterface
from bws_core.settings import settings
from bws_core.utils.logger import get_logger

T = TypeVar("T")
R = TypeVar("R")

ProgressFn = Callable[[int, int], None]

logger = get_logger(__name__)


class ReplicatePool(ReplicateRunnerInterface):
    """Runs replicate tasks serially or on a process pool."""

    def __init__(self, workers: Optional[int] = None) -> None:
        self.workers = max(1, settings.workers if workers is None else int(workers))

    # ------------------------------------------------------------------
    # Public API
    # ------------------------------------------------------------------

    def map(
        self,
        fn: Callable[[T], R],
        tasks: Sequence[T],
        progress: Optional[ProgressFn] = None,
    ) -> List[R]:
        total = len(tasks)
        if total == 0:
            return []
        if self.workers == 1 or total == 1:
            return self._map_serial(fn, tasks, progress)
        return self._map_parallel(fn, tasks, progress)

    # ------------------------------------------------------------------
    # Internals
    # ------------------------------------------------------------------

    @staticmethod
    def _map_serial(fn, tasks, progress) -> list:
        results = []
        for done, task in enumerate(tasks, start=1):
            results.append(fn(task))
            if progress is not None:
                progress(done, len(tasks))
        return results

    def _map_parallel(self, fn, tasks, progress) -> list:
        logger.debug("dispatching %d tasks to %d workers", len(tasks), self.workers)
        results: list = [None] * len(tasks)
        with ProcessPoolExecutor(max_workers=self.workers) as executor:
            futures = {executor.submit(fn, task): i for i, task in enumerate(tasks)}
            for done, future in enumerate(as_completed(futures), start=1):
                results[futures[future]] = future.result()
                if progress is not None:
                    progress(done, len(tasks))
        return results
