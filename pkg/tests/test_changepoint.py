import pytest

from bws_core.changepoint import (
    admissible_splits,
    change_points,
    changepoint_p_value,
    fit_split,
    recursive_detect,
    scan_split,
)
from bws_core.changepoint import detect as detect_module
from bws_core.exceptions import DomainError, SegmentTooShortError, SeriesTooShortError
from bws_core.inference import SeriesLikelihood
from bws_core.schemas import ChangePointNode, TimeSeries, WfParams


def _series(n: int) -> TimeSeries:
    freqs = [0.3 + 0.02 * i for i in range(n)]
    return TimeSeries.from_arrays(range(n), freqs, label=f"ramp{n}")


class TestSplits:
    def test_admissible_midpoints(self):
        assert admissible_splits(_series(8)) == [2.5, 3.5, 4.5]
        assert admissible_splits(_series(6)) == [2.5]
        assert admissible_splits(_series(5)) == []

    def test_segment_too_short(self):
        with pytest.raises(SegmentTooShortError):
            fit_split(_series(8), 1.5)

    def test_split_on_an_observation(self):
        with pytest.raises(DomainError):
            fit_split(_series(8), 3.0)

    def test_chains_share_the_boundary_observation(self, two_regime_series):
        start = WfParams(popsize=1000, selstrength=0.0)
        split = fit_split(two_regime_series, 6.5, start=start)
        left = SeriesLikelihood(two_regime_series.slice(0, 7))
        right = SeriesLikelihood(two_regime_series.slice(6))
        assert split.before.loglik >= left(start)
        assert split.after.loglik >= right(start)
        assert split.before.params.selstrength > 0 > split.after.params.selstrength


class TestScan:
    def test_needs_six_points(self):
        with pytest.raises(SeriesTooShortError):
            scan_split(_series(5))

    def test_locates_the_switch(self, two_regime_series):
        node = scan_split(two_regime_series)
        assert abs(node.split_time - 6.5) <= 2.0
        assert node.loglik_split >= node.loglik_const - 1e-9
        assert node.likelihood_ratio >= 0.0
        assert node.n_points == 12
        assert (node.start_time, node.end_time) == (0.0, 11.0)

    def test_reversed_series_reflects_the_split(self, two_regime_series):
        forward = scan_split(two_regime_series)
        backward = scan_split(two_regime_series.reversed())
        assert abs(backward.split_time - (11.0 - forward.split_time)) <= 2.0


class TestSignificance:
    def test_bootstrap_fields(self, two_regime_series):
        node = changepoint_p_value(two_regime_series, replicates=2, seed=4)
        assert node.replicates + node.failed_replicates == 2
        assert node.p_value == pytest.approx((1 + node.exceed_count) / (node.replicates + 1))

    def test_without_replicates_nothing_is_significant(self, two_regime_series):
        tree = recursive_detect(two_regime_series, replicates=0)
        assert tree.p_value is None
        assert not tree.significant
        assert tree.children == []
        assert change_points(tree) == []


class TestRecursion:
    @pytest.fixture
    def visits(self, monkeypatch):
        calls = []

        def fake(segment, generation_time=None, replicates=None, seed=None, *, node_id=1, depth=0, pool=None, progress=None):
            times = list(segment.times)
            split = times[len(times) // 2] - 0.5
            calls.append((node_id, depth, len(segment)))
            flat = WfParams(popsize=100.0)
            return ChangePointNode(
                start_time=times[0],
                end_time=times[-1],
                n_points=len(segment),
                depth=depth,
                split_time=split,
                before=WfParams(popsize=50.0, selstrength=0.1),
                after=WfParams(popsize=80.0, selstrength=-0.1),
                constant=flat,
                loglik_split=1.0,
                loglik_const=0.0,
                likelihood_ratio=2.0,
                p_value=0.01,
                replicates=99,
            )

        monkeypatch.setattr(detect_module, "changepoint_p_value", fake)
        return calls

    def test_children_of_significant_nodes(self, visits):
        tree = recursive_detect(_series(13), threshold=0.05, max_depth=3)
        assert [(i, d) for i, d, _ in visits] == [(1, 0), (2, 1), (3, 1)]
        assert [len(c.children) for c in tree.children] == [0, 0]
        # left half ends at the last point before the split, right half starts there
        assert [n for _, _, n in visits] == [13, 6, 8]

    def test_depth_limit(self, visits):
        tree = recursive_detect(_series(13), max_depth=1)
        assert visits == [(1, 0, 13)]
        assert tree.significant and tree.children == []

    def test_change_points_in_time_order(self, visits):
        rows = change_points(recursive_detect(_series(13), max_depth=3))
        assert [r.split_time for r in rows] == sorted(r.split_time for r in rows)
        assert [r.depth for r in rows] == [1, 0, 1]
        assert rows[0].selstrength_before == 0.1
