import numpy as np
import pytest
from scipy.stats import chisquare

from bws_core.exceptions import ConfigError, DomainError, GapAlignmentError, GridError, SizeGuardError
from bws_core.schemas import TimeSeries, WfParams
from bws_core.wf import (
    FrequencyGrid,
    clamp_selection,
    default_generation_time,
    exact_k_step_transition,
    exact_transition_from,
    generation_steps,
    make_rng,
    one_step_transition,
    parse_schedule,
    selection_kernel,
    simulate_like,
    simulate_schedule,
    simulate_trajectory,
    transition_matrix,
)


# ---------------------------------------------------------------------------
# Selection kernel
# ---------------------------------------------------------------------------

class TestSelectionKernel:
    def test_boundaries_are_fixed(self):
        for s in (-2.0, 0.0, 0.7):
            assert selection_kernel(0.0, s) == 0.0
            assert selection_kernel(1.0, s) == 1.0

    def test_neutral_is_identity(self):
        x = np.linspace(0, 1, 11)
        np.testing.assert_allclose(selection_kernel(x, 0.0), x)

    def test_symmetry(self):
        x = np.linspace(0.05, 0.95, 7)
        np.testing.assert_allclose(selection_kernel(x, 0.4) + selection_kernel(1 - x, -0.4), 1.0)

    def test_logistic_shift(self):
        x = 0.3
        g = selection_kernel(x, 0.5)
        assert np.log(g / (1 - g)) == pytest.approx(np.log(x / (1 - x)) + 0.5)

    def test_rejects_frequency_outside_unit_interval(self):
        with pytest.raises(DomainError):
            selection_kernel(1.2, 0.1)
        with pytest.raises(ValueError):
            selection_kernel(-0.1, 0.1)

    def test_clamp(self):
        assert clamp_selection(10.0) == 5.0
        assert clamp_selection(-10.0) == -5.0
        assert clamp_selection(0.25) == 0.25


# ---------------------------------------------------------------------------
# Exact transitions
# ---------------------------------------------------------------------------

class TestExactTransitions:
    def test_grid_lookup(self):
        grid = FrequencyGrid(10)
        assert grid.index_of(0.3) == 3
        with pytest.raises(GridError):
            grid.index_of(0.33)

    def test_one_step_is_binomial(self):
        dist = one_step_transition(0.5, WfParams(popsize=10))
        assert dist.mass.sum() == pytest.approx(1.0)
        assert dist.mean() == pytest.approx(0.5)
        assert dist.variance() == pytest.approx(0.25 / 10)

    def test_one_step_needs_integer_popsize(self):
        with pytest.raises(DomainError):
            one_step_transition(0.5, WfParams(popsize=10.5))

    def test_one_step_rejects_off_grid_start(self):
        with pytest.raises(GridError):
            one_step_transition(0.33, WfParams(popsize=10))

    def test_matrix_rows_and_absorbing_states(self):
        matrix = transition_matrix(WfParams(popsize=20, selstrength=0.3))
        np.testing.assert_allclose(matrix.sum(axis=1), 1.0)
        assert matrix[0, 0] == 1.0
        assert matrix[-1, -1] == 1.0
        assert not matrix.flags.writeable

    def test_size_guard(self):
        with pytest.raises(SizeGuardError):
            transition_matrix(WfParams(popsize=3000))

    def test_neutral_k_step_moments(self):
        n, k, x = 20, 5, 0.5
        dist = exact_k_step_transition(x, WfParams(popsize=n), k)
        assert dist.mean() == pytest.approx(x, abs=1e-12)
        assert dist.variance() == pytest.approx(x * (1 - x) * (1 - (1 - 1 / n) ** k), rel=1e-9)

    def test_off_grid_start(self):
        dist = exact_transition_from(0.33, WfParams(popsize=10), 1)
        assert dist.mean() == pytest.approx(0.33)

    def test_off_grid_start_agrees_on_grid(self):
        params = WfParams(popsize=15, selstrength=0.2)
        a = exact_transition_from(0.4, params, 3)
        b = exact_k_step_transition(0.4, params, 3)
        np.testing.assert_allclose(a.mass, b.mass, atol=1e-14)

    def test_two_generations_of_two_copies(self):
        dist = exact_k_step_transition(0.5, WfParams(popsize=2), 2)
        np.testing.assert_allclose(dist.mass, [0.375, 0.25, 0.375], atol=1e-15)

    @pytest.mark.parametrize("m", [1, 3, 6])
    def test_chapman_kolmogorov(self, m):
        params = WfParams(popsize=30, selstrength=0.25)
        k = 7
        direct = exact_k_step_transition(0.4, params, k)
        first = exact_k_step_transition(0.4, params, m)
        composed = first.mass @ np.linalg.matrix_power(transition_matrix(params), k - m)
        np.testing.assert_allclose(direct.mass, composed, atol=1e-12)


# ---------------------------------------------------------------------------
# Simulation
# ---------------------------------------------------------------------------

class TestSimulation:
    def test_trajectory_shape_and_grid(self):
        traj = simulate_trajectory(0.3, WfParams(popsize=100), 50, seed=1)
        assert traj.shape == (51,)
        assert traj[0] == 0.3
        np.testing.assert_allclose(traj[1:] * 100, np.round(traj[1:] * 100))

    def test_seeded_runs_repeat(self):
        params = WfParams(popsize=100, selstrength=0.05)
        a = simulate_trajectory(0.3, params, 30, seed=7)
        b = simulate_trajectory(0.3, params, 30, seed=7)
        np.testing.assert_array_equal(a, b)

    def test_absorbed_start_stays_absorbed(self):
        assert np.all(simulate_trajectory(0.0, WfParams(popsize=50, selstrength=1.0), 20, seed=0) == 0.0)
        assert np.all(simulate_trajectory(1.0, WfParams(popsize=50, selstrength=-1.0), 20, seed=0) == 1.0)

    def test_parse_schedule(self):
        assert parse_schedule("0:+0.2,100:−0.2") == [(0, 0.2), (100, -0.2)]
        with pytest.raises(ConfigError):
            parse_schedule("0=0.2")

    def test_schedule_must_start_at_zero(self):
        with pytest.raises(ConfigError):
            simulate_schedule(0.5, 100, [(5, 0.1)], 10, seed=0)

    def test_schedule_switches_direction(self):
        traj = simulate_schedule(0.2, 2000, [(0, 0.3), (20, -0.3)], 40, seed=4)
        assert traj[20] > 0.7
        assert traj[40] < 0.5

    def test_simulate_like_keeps_times(self):
        template = TimeSeries.from_arrays([0, 2, 6, 8], [0.4, 0.5, 0.45, 0.5], label="t")
        out = simulate_like(template, WfParams(popsize=200), 2.0, make_rng(3))
        np.testing.assert_array_equal(out.times, template.times)
        assert out.points[0].frequency == 0.4
        assert out.label == "t"

    def test_one_step_outcomes_fit_the_binomial(self):
        params = WfParams(popsize=20, selstrength=0.3)
        rng = make_rng(12)
        draws = 4000
        finals = [simulate_trajectory(0.35, params, 1, rng=rng)[1] for _ in range(draws)]
        observed = np.bincount(np.round(np.array(finals) * 20).astype(int), minlength=21).astype(float)
        expected = draws * one_step_transition(0.35, params).mass
        keep = np.flatnonzero(expected >= 5.0)
        lo, hi = keep[0], keep[-1]
        obs, exp = observed[lo : hi + 1].copy(), expected[lo : hi + 1].copy()
        obs[0] += observed[:lo].sum()
        exp[0] += expected[:lo].sum()
        obs[-1] += observed[hi + 1 :].sum()
        exp[-1] += expected[hi + 1 :].sum()
        assert chisquare(obs, exp).pvalue > 1e-3

    def test_neutral_frequency_is_a_martingale(self):
        rng = make_rng(21)
        params = WfParams(popsize=50)
        finals = [simulate_trajectory(0.5, params, 30, rng=rng)[-1] for _ in range(3000)]
        assert np.mean(finals) == pytest.approx(0.5, abs=0.03)

    def test_selected_mean_matches_exact(self):
        rng = make_rng(22)
        params = WfParams(popsize=50, selstrength=0.1)
        finals = [simulate_trajectory(0.2, params, 10, rng=rng)[-1] for _ in range(3000)]
        expected = exact_k_step_transition(0.2, params, 10).mean()
        assert np.mean(finals) == pytest.approx(expected, abs=0.03)


# ---------------------------------------------------------------------------
# Timing and RNG
# ---------------------------------------------------------------------------

class TestTiming:
    def test_steps(self):
        series = TimeSeries.from_arrays([0, 10, 30], [0.2, 0.3, 0.4])
        assert default_generation_time(series) == 10.0
        np.testing.assert_array_equal(generation_steps(series, 10.0), [1, 2])
        np.testing.assert_array_equal(generation_steps(series, 5.0), [2, 4])

    def test_misaligned_gap(self):
        series = TimeSeries.from_arrays([0, 10, 30], [0.2, 0.3, 0.4])
        with pytest.raises(GapAlignmentError, match="re-bin"):
            generation_steps(series, 4.0)


def test_rng_streams():
    a = make_rng(5, 1).random(3)
    b = make_rng(5, 1).random(3)
    c = make_rng(5, 2).random(3)
    np.testing.assert_array_equal(a, b)
    assert not np.array_equal(a, c)
    with pytest.raises(ConfigError):
        make_rng(-1)
