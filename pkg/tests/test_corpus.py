import numpy as np
import pytest

from bws_core.corpus import aggregate_word_set, bin_counts, counts_frame, equalize_sampling, usage_screen
from bws_core.exceptions import EmptySeriesError, MissingTokensError
from bws_core.schemas import BinSpec, CountRow, TimeSeries, VariantCounts


def _counts(word, triples):
    return VariantCounts(word=word, rows=[CountRow(year=y, count_focal=f, count_other=o) for y, f, o in triples])


class TestBinning:
    def test_decades(self, annual_counts):
        series = bin_counts(annual_counts, BinSpec(width_years=10))
        np.testing.assert_allclose(series.times, [1804.5, 1814.5, 1824.5])
        assert series.points[0].frequency == pytest.approx(45 / 1045)
        assert series.points[0].tokens == 1045
        assert series.label == "rising"

    def test_constant_decade(self):
        counts = _counts("x", [(1800 + i, 10, 30) for i in range(10)])
        series = bin_counts(counts, BinSpec(width_years=10))
        point = series.points[0]
        assert (point.time, point.frequency, point.tokens) == (1804.5, 0.25, 400)

    def test_tokens_are_conserved(self, annual_counts):
        series = bin_counts(annual_counts, BinSpec(width_years=7), min_tokens=0)
        assert int(series.tokens.sum()) == int(counts_frame(annual_counts)["total"].sum())

    def test_unit_width_is_the_annual_series(self, annual_counts):
        series = bin_counts(annual_counts, BinSpec(width_years=1))
        assert len(series) == 30
        np.testing.assert_allclose(series.times, np.arange(1800, 1830))
        assert series.points[3].frequency == pytest.approx(3 / 103)

    def test_origin_year_shifts_bins(self, annual_counts):
        series = bin_counts(annual_counts, BinSpec(width_years=10, origin_year=1795))
        np.testing.assert_allclose(series.times, [1799.5, 1809.5, 1819.5, 1829.5])
        assert series.points[0].tokens == sum(100 + i for i in range(5))

    def test_thin_bins_are_omitted(self):
        counts = _counts("thin", [(1800, 5, 5), (1810, 50, 60), (1820, 1, 1), (1830, 70, 70)])
        series = bin_counts(counts, BinSpec(width_years=10), min_tokens=100)
        np.testing.assert_allclose(series.times, [1814.5, 1834.5])

    def test_nothing_left(self):
        counts = _counts("rare", [(1800, 1, 1)])
        with pytest.raises(EmptySeriesError):
            bin_counts(counts, BinSpec(width_years=10), min_tokens=100)

    def test_duplicate_years_rejected(self):
        with pytest.raises(ValueError):
            _counts("dup", [(1800, 1, 1), (1800, 2, 2)])


class TestUsageScreen:
    def test_rising_word_passes(self, annual_counts):
        screen = usage_screen(annual_counts)
        assert screen.passed
        assert screen.max_bin_start == 1825
        assert screen.max_frequency == pytest.approx(135 / 635)

    def test_unused_word_fails(self):
        screen = usage_screen(_counts("never", [(1800 + i, 0, 50) for i in range(10)]))
        assert not screen.passed
        assert screen.max_frequency == 0.0

    def test_threshold_is_strict(self):
        screen = usage_screen(_counts("edge", [(1800, 1, 99)]), threshold=0.01)
        assert screen.max_frequency == pytest.approx(0.01)
        assert not screen.passed


def _series(label, times, freqs, tokens=None):
    return TimeSeries.from_arrays(times, freqs, tokens, label=label)


class TestAggregate:
    def test_mean_of_members(self):
        a = _series("a", [1, 2], [0.2, 0.4], [100, 100])
        b = _series("b", [1, 2], [0.4, 0.6], [300, 100])
        agg = aggregate_word_set([a, b], label="set")
        np.testing.assert_allclose(agg.frequencies, [0.3, 0.5])
        np.testing.assert_array_equal(agg.tokens, [400, 200])
        assert agg.label == "set"

    def test_missing_word_is_left_out(self):
        a = _series("a", [1, 2, 3], [0.2, 0.4, 0.6])
        b = _series("b", [1, 3], [0.4, 0.8])
        agg = aggregate_word_set([a, b])
        np.testing.assert_allclose(agg.times, [1, 2, 3])
        np.testing.assert_allclose(agg.frequencies, [0.3, 0.4, 0.7])
        assert agg.tokens is None

    def test_all_members_complete(self):
        members = [_series(w, [1, 2], [1.0, 1.0]) for w in "abc"]
        np.testing.assert_array_equal(aggregate_word_set(members).frequencies, [1.0, 1.0])

    def test_member_order_does_not_matter(self):
        members = [_series(w, [1, 2, 3], np.random.default_rng(i).random(3)) for i, w in enumerate("abcd")]
        forward = aggregate_word_set(members)
        backward = aggregate_word_set(members[::-1])
        np.testing.assert_array_equal(forward.frequencies, backward.frequencies)

    def test_token_weighted(self):
        a = _series("a", [1], [0.2], [100])
        b = _series("b", [1], [0.6], [300])
        agg = aggregate_word_set([a, b], token_weighted=True)
        assert agg.points[0].frequency == pytest.approx(0.5)

    def test_token_weighted_needs_tokens(self):
        with pytest.raises(MissingTokensError):
            aggregate_word_set([_series("a", [1], [0.2])], token_weighted=True)

    def test_empty(self):
        with pytest.raises(EmptySeriesError):
            aggregate_word_set([], label="nothing")


class TestEqualize:
    @pytest.fixture
    def uneven(self):
        return _series("uneven", [1, 2, 3], [0.5, 0.2, 1.0], [100, 50, 200])

    def test_downsamples_to_smallest(self, uneven):
        out = equalize_sampling(uneven, seed=1)
        np.testing.assert_array_equal(out.tokens, [50, 50, 50])
        assert out.points[1] == uneven.points[1]
        assert out.points[2].frequency == 1.0
        assert (out.points[0].frequency * 50) == pytest.approx(round(out.points[0].frequency * 50))

    def test_deterministic(self, uneven):
        assert equalize_sampling(uneven, seed=7) == equalize_sampling(uneven, seed=7)

    def test_needs_tokens(self):
        with pytest.raises(MissingTokensError):
            equalize_sampling(_series("bare", [1, 2], [0.1, 0.2]))

    def test_unbiased_over_seeds(self):
        series = _series("wide", [1, 2], [0.5, 0.3], [1000, 100])
        draws = [equalize_sampling(series, seed=i).points[0].frequency for i in range(2000)]
        assert np.mean(draws) == pytest.approx(0.5, abs=0.005)
        assert len(set(draws)) > 10
