"""Bootstrap significance of a split and recursive subdivision."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, List, Optional, Tuple

from bws_core.changepoint.split import MIN_SCAN_POINTS, scan_split
from bws_core.exceptions import BwsError
from bws_core.inference.bootstrap import empirical_p_value
from bws_core.schemas import ChangePointNode, ChangePointRow, TimeSeries, WfParams
from bws_core.scheduler import ReplicatePool
from bws_core.settings import settings
from bws_core.utils.logger import get_logger
from bws_core.wf.rng import make_rng
from bws_core.wf.simulate import simulate_like
from bws_core.wf.timing import default_generation_time

__all__ = [
    "changepoint_p_value",
    "recursive_detect",
    "change_points",
]

logger = get_logger(__name__)

ProgressFn = Callable[[int, int], None]


@dataclass(frozen=True, slots=True)
class _SplitReplicate:
    template: TimeSeries
    null: WfParams
    generation_time: float
    seed: int
    keys: Tuple[int, ...]


def _run_split_replicate(task: _SplitReplicate) -> Optional[float]:
    rng = make_rng(task.seed, *task.keys)
    try:
        synthetic = simulate_like(task.template, task.null, task.generation_time, rng)
        return scan_split(synthetic, task.generation_time).likelihood_ratio
    except BwsError as exc:
        logger.warning("change-point replicate %s failed: %s", task.keys, exc)
        return None


def changepoint_p_value(
    series: TimeSeries,
    generation_time: Optional[float] = None,
    replicates: Optional[int] = None,
    seed: Optional[int] = None,
    *,
    node_id: int = 1,
    depth: int = 0,
    pool: Optional[ReplicatePool] = None,
    progress: Optional[ProgressFn] = None,
) -> ChangePointNode:
    """Scan for the best split and test it against the constant model.

    Replicates are simulated from the constant fit (s free) at the observed
    times and rescanned; replicate ``i`` of tree node ``node_id`` draws from
    ``make_rng(seed, node_id, i)``.
    """
    replicates = settings.changepoint_replicates if replicates is None else int(replicates)
    seed = settings.default_seed if seed is None else int(seed)
    g = default_generation_time(series) if generation_time is None else generation_time

    node = scan_split(series, g, depth=depth)
    null = WfParams(popsize=node.constant.integer_popsize, selstrength=node.constant.selstrength)
    tasks = [_SplitReplicate(series, null, g, seed, (node_id, i)) for i in range(replicates)]
    pool = pool if pool is not None else ReplicatePool()
    outcome = empirical_p_value(
        node.likelihood_ratio, pool.map(_run_split_replicate, tasks, progress)
    )
    if outcome.failed_replicates:
        logger.warning(
            "%d of %d change-point replicates failed for '%s'",
            outcome.failed_replicates,
            replicates,
            series.label,
        )
    return node.model_copy(
        update={
            "p_value": outcome.p_value,
            "p_value_raw": outcome.p_value_raw,
            "exceed_count": outcome.exceed_count,
            "replicates": outcome.replicates,
            "failed_replicates": outcome.failed_replicates,
        }
    )


def recursive_detect(
    series: TimeSeries,
    generation_time: Optional[float] = None,
    threshold: float = 0.05,
    replicates: Optional[int] = None,
    max_depth: int = 3,
    seed: Optional[int] = None,
    *,
    pool: Optional[ReplicatePool] = None,
    progress: Optional[ProgressFn] = None,
) -> ChangePointNode:
    """Test the best split and, when significant, repeat on both sides.

    Sub-series are the observations before the split and the last of those
    followed by the observations after it. A sub-series is scanned only when
    it still has enough points and the tree is shallower than ``max_depth``.
    """
    g = default_generation_time(series) if generation_time is None else generation_time

    def detect(segment: TimeSeries, node_id: int, depth: int) -> ChangePointNode:
        node = changepoint_p_value(
            segment, g, replicates, seed, node_id=node_id, depth=depth, pool=pool, progress=progress
        )
        significant = node.p_value is not None and node.p_value < threshold
        logger.info(
            "'%s' [%g, %g]: split at %g, lambda=%.3f, p=%s%s",
            segment.label,
            node.start_time,
            node.end_time,
            node.split_time,
            node.likelihood_ratio,
            node.p_value,
            " (significant)" if significant else "",
        )
        children: List[ChangePointNode] = []
        if significant and depth + 1 < max_depth:
            n_left = sum(1 for p in segment.points if p.time < node.split_time)
            halves = ((segment.slice(0, n_left), 2 * node_id), (segment.slice(n_left - 1), 2 * node_id + 1))
            for half, child_id in halves:
                if len(half) >= MIN_SCAN_POINTS:
                    children.append(detect(half, child_id, depth + 1))
        return node.model_copy(update={"significant": significant, "children": children})

    return detect(series, 1, 0)


def change_points(tree: ChangePointNode) -> List[ChangePointRow]:
    """Significant splits of a tree in time order."""
    rows: List[ChangePointRow] = []

    def walk(node: ChangePointNode) -> None:
        if node.significant:
            rows.append(
                ChangePointRow(
                    split_time=node.split_time,
                    popsize_before=node.before.popsize,
                    selstrength_before=node.before.selstrength,
                    popsize_after=node.after.popsize,
                    selstrength_after=node.after.selstrength,
                    p_value=node.p_value,
                    p_value_raw=node.p_value_raw,
                    depth=node.depth,
                )
            )
        for child in node.children:
            walk(child)

    walk(tree)
    return sorted(rows, key=lambda r: r.split_time)
