"""Shared fixtures: small simulated series and count tables."""

from pathlib import Path

import pytest

from bws_core.schemas import CountRow, TimeSeries, VariantCounts, WfParams
from bws_core.wf import simulate_schedule, simulate_trajectory

from helpers import series_from_trajectory

FIXTURES = Path(__file__).parent / "fixtures"
REPO_ROOT = Path(__file__).resolve().parents[1]


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture
def manifest_path() -> Path:
    return REPO_ROOT / "config" / "word_sets.yml"


@pytest.fixture
def drift_series() -> TimeSeries:
    traj = simulate_trajectory(0.5, WfParams(popsize=500, selstrength=0.0), 40, seed=11)
    return series_from_trajectory(traj, every=4, label="drift")


@pytest.fixture
def selected_series() -> TimeSeries:
    traj = simulate_trajectory(0.1, WfParams(popsize=1000, selstrength=0.1), 60, seed=5)
    return series_from_trajectory(traj, every=5, label="selected")


@pytest.fixture
def two_regime_series() -> TimeSeries:
    """+0.3 for six generations, then -0.3; 12 observations one generation apart."""
    traj = simulate_schedule(0.2, 1000, [(0, 0.3), (6, -0.3)], 11, seed=3)
    return series_from_trajectory(traj, label="two-regime")


@pytest.fixture
def annual_counts() -> VariantCounts:
    """Thirty years from 1800; focal counts rise by one per year, 100 competitor tokens a year."""
    rows = [CountRow(year=1800 + i, count_focal=i, count_other=100) for i in range(30)]
    return VariantCounts(word="rising", rows=rows)
