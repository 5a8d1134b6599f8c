import math

import pytest
from scipy import stats

from bws_core.analysis import chi2_upper_tail, classify_region, ellipse_from_fits, g_test
from bws_core.exceptions import ContingencyError
from bws_core.pipeline.analysis import ellipse_frame, run_ellipses, run_gtest
from bws_core.schemas import ContingencyTable, EllipseSummary, RegionClass
from bws_core.schemas.config import EllipseConfig, GTestConfig

VERB_TABLE = [[9, 2, 8], [7, 4, 23]]

ORDER = {
    RegionClass.NON_IRREGULARISING: 0,
    RegionClass.INCONCLUSIVE: 1,
    RegionClass.IRREGULARISING: 2,
}


def _ellipse(center, axes=(0.0, 0.0), angle=0.0):
    return EllipseSummary(center=center, axes=axes, angle=angle, n_binnings=3)


class TestGTest:
    def test_verb_table_goodness_of_fit(self):
        result = g_test(ContingencyTable(counts=VERB_TABLE))
        assert result.statistic == pytest.approx(6.97, abs=0.01)
        assert result.dof == 2
        assert result.p_value == pytest.approx(0.031, abs=0.002)
        assert result.mode == "goodness_of_fit"

    def test_verb_table_independence(self):
        result = g_test(ContingencyTable(counts=VERB_TABLE), mode="independence")
        assert result.dof == 2
        assert 0.10 < result.p_value < 0.14

    def test_tail_matches_scipy(self):
        for statistic, dof in [(6.97, 2), (0.5, 1), (12.0, 4), (30.0, 9)]:
            assert chi2_upper_tail(statistic, dof) == pytest.approx(stats.chi2.sf(statistic, dof), rel=1e-10)
        assert chi2_upper_tail(0.0, 3) == 1.0

    def test_proportional_rows(self):
        result = g_test(ContingencyTable(counts=[[1, 2, 3], [2, 4, 6]]))
        assert result.statistic == pytest.approx(0.0, abs=1e-12)
        assert result.p_value == pytest.approx(1.0)

    def test_doubling_counts_doubles_the_statistic(self):
        single = g_test(ContingencyTable(counts=VERB_TABLE))
        double = g_test(ContingencyTable(counts=[[2 * c for c in row] for row in VERB_TABLE]))
        assert double.statistic == pytest.approx(2 * single.statistic)

    def test_zero_observed_cells_contribute_nothing(self):
        result = g_test(ContingencyTable(counts=[[0, 5, 5], [2, 4, 4]]))
        assert math.isfinite(result.statistic)

    def test_empty_row(self):
        with pytest.raises(ContingencyError):
            g_test(ContingencyTable(counts=[[0, 0, 0], [1, 2, 3]]))

    def test_goodness_of_fit_takes_two_rows(self):
        with pytest.raises(ContingencyError):
            g_test(ContingencyTable(counts=[[1, 2], [3, 4], [5, 6]]))

    def test_observed_with_zero_expectation(self):
        with pytest.raises(ContingencyError):
            g_test(ContingencyTable(counts=[[1, 2, 3], [0, 4, 6]]))

    def test_pipeline_records_errors(self):
        report = run_gtest(GTestConfig(counts=[[0, 0], [1, 1]]))
        assert report.result is None
        assert report.errors[0].item == "table"


class TestEllipse:
    def test_diagonal_pair(self):
        e = ellipse_from_fits([(0.0, 0.1), (0.2, 0.3)])
        assert e.center == pytest.approx((0.1, 0.8))
        assert e.angle == pytest.approx(-math.pi / 4)
        assert e.axes[0] == pytest.approx(0.2)
        assert e.axes[1] == pytest.approx(0.0, abs=1e-9)

    def test_single_binning(self):
        e = ellipse_from_fits([(0.05, 0.01)], label="once")
        assert e.center == pytest.approx((0.05, 0.99))
        assert e.axes == (0.0, 0.0)
        assert e.n_binnings == 1

    def test_order_of_binnings(self):
        fits = [(0.01, 0.2), (0.03, 0.05), (-0.01, 0.4), (0.02, 0.1)]
        a = ellipse_from_fits(fits)
        b = ellipse_from_fits(fits[::-1])
        assert a.center == pytest.approx(b.center)
        assert a.axes == pytest.approx(b.axes)
        assert a.angle == pytest.approx(b.angle)

    def test_axes_ordered(self):
        e = ellipse_from_fits([(0.0, 0.0), (0.01, 0.5), (0.02, 0.2)])
        assert e.axes[0] >= e.axes[1] >= 0.0
        assert -math.pi / 2 < e.angle <= math.pi / 2

    def test_no_fits(self):
        with pytest.raises(ValueError):
            ellipse_from_fits([])


class TestClassify:
    def test_point_inside(self):
        assert classify_region(_ellipse((0.05, 0.99))) is RegionClass.IRREGULARISING

    def test_negative_selection(self):
        assert classify_region(_ellipse((-0.05, 0.5))) is RegionClass.NON_IRREGULARISING

    def test_straddling_the_boundary(self):
        e = _ellipse((0.02, 0.96), axes=(0.05, 0.001))
        assert classify_region(e) is RegionClass.INCONCLUSIVE
        assert classify_region(e, containment="exact") is RegionClass.INCONCLUSIVE

    def test_exact_outline_resolves_a_tilted_ellipse(self):
        e = _ellipse((-0.01, 0.94), axes=(0.1, 0.001), angle=-math.pi / 4)
        assert classify_region(e) is RegionClass.INCONCLUSIVE
        assert classify_region(e, containment="exact") is RegionClass.NON_IRREGULARISING

    def test_threshold_is_monotone(self):
        e = _ellipse((0.012, 0.93), axes=(0.04, 0.001), angle=math.pi / 2)
        ranks = [ORDER[classify_region(e, p)] for p in (0.01, 0.05, 0.08, 0.12, 0.2)]
        assert ranks == sorted(ranks)
        assert ranks[0] == 0 and ranks[-1] == 2


class TestVerbFits:
    @pytest.fixture
    def report(self, fixtures_dir):
        inputs = [str(fixtures_dir / f"verb_fits_{w}yr.csv") for w in (10, 20, 40)]
        return run_ellipses(EllipseConfig(inputs=inputs))

    def test_classes(self, report):
        assert report.classes == {
            "blow": RegionClass.NON_IRREGULARISING,
            "dive": RegionClass.INCONCLUSIVE,
            "grow": RegionClass.NON_IRREGULARISING,
            "wake": RegionClass.IRREGULARISING,
        }

    def test_incomplete_label_is_an_error(self, report):
        assert [e.item for e in report.errors] == ["sit"]
        assert "missing from binnings" in report.errors[0].error

    def test_wake_ellipse(self, report):
        wake = next(e for e in report.ellipses if e.label == "wake")
        assert wake.n_binnings == 3
        assert wake.center == pytest.approx((0.024, (1.0 + 1.0 + 0.992) / 3))

    def test_frame(self, report):
        frame = ellipse_frame(report)
        assert list(frame["label"]) == ["blow", "dive", "grow", "wake"]
        assert frame.loc[frame["label"] == "wake", "class"].item() == "irregularising"

    def test_unreadable_input(self, fixtures_dir, tmp_path):
        inputs = [str(fixtures_dir / "verb_fits_10yr.csv"), str(tmp_path / "absent.csv")]
        report = run_ellipses(EllipseConfig(inputs=inputs))
        assert report.errors[0].item.endswith("absent.csv")
        assert len(report.classes) == 4
