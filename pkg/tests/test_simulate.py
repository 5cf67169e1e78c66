"""Simulation layer: Cholesky factor, stable sampler, increment generator."""
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from levycov import (
    LevyModel,
    SimulationConfig,
    StableComponent,
    cholesky2,
    sample_stable,
    simulate_increments,
)


class TestCholesky2:
    def test_identity(self):
        assert np.array_equal(cholesky2(np.eye(2)), np.eye(2))

    def test_reference(self, ref_cov):
        L = cholesky2(ref_cov)
        assert np.allclose(L @ L.T, ref_cov, atol=1e-14)
        assert L[0, 1] == 0.0
        assert L[0, 0] > 0 and L[1, 1] > 0

    def test_rank_deficient_first_axis(self):
        L = cholesky2(np.array([[0.0, 0.0], [0.0, 4.0]]))
        assert np.array_equal(L, [[0.0, 0.0], [0.0, 2.0]])

    def test_rank_deficient_second_axis(self):
        cov = np.array([[4.0, 2.0], [2.0, 1.0]])  # rank 1
        L = cholesky2(cov)
        assert np.allclose(L @ L.T, cov, atol=1e-14)
        assert L[1, 1] == 0.0

    def test_rejects_asymmetric(self):
        with pytest.raises(ValueError, match="symmetric"):
            cholesky2(np.array([[1.0, 0.3], [0.1, 1.0]]))

    def test_rejects_indefinite(self):
        with pytest.raises(ValueError, match="semi-definite"):
            cholesky2(np.array([[1.0, 3.0], [3.0, 1.0]]))

    @given(st.lists(st.floats(-3.0, 3.0), min_size=4, max_size=4))
    def test_factorizes_random_psd(self, entries):
        G = np.array(entries).reshape(2, 2)
        cov = G @ G.T
        L = cholesky2(cov)
        assert np.allclose(L @ L.T, cov, atol=1e-9)
        assert L[0, 1] == 0.0
        assert L[0, 0] >= 0.0 and L[1, 1] >= 0.0


class TestSampleStable:
    def test_zero_scale(self):
        rng = np.random.default_rng(0)
        assert sample_stable(1.5, 0.0, 0.01, rng) == 0.0
        assert np.array_equal(sample_stable(1.5, 0.0, 0.01, rng, size=5),
                              np.zeros(5))

    def test_deterministic(self):
        a = sample_stable(0.7, 1.0, 0.01, np.random.default_rng(42), size=100)
        b = sample_stable(0.7, 1.0, 0.01, np.random.default_rng(42), size=100)
        assert np.array_equal(a, b)

    def test_gaussian_case_variance(self):
        # alpha = 2 is Gaussian with variance 2 * scale^2 * dt
        draws = sample_stable(2.0, 1.5, 0.01, np.random.default_rng(1),
                              size=200_000)
        assert draws.var() == pytest.approx(2.0 * 1.5 ** 2 * 0.01, rel=0.03)

    def test_cauchy_case_median(self):
        draws = sample_stable(1.0, 2.0, 0.5, np.random.default_rng(2),
                              size=200_000)
        assert abs(np.median(draws)) < 0.02

    def test_symmetry(self):
        for alpha in (0.5, 1.0, 1.3, 2.0):
            draws = sample_stable(alpha, 1.0, 0.1, np.random.default_rng(3),
                                  size=100_000)
            assert abs(np.median(draws)) < 0.01 * (0.1 ** (1 / alpha)) + 0.01

    def test_scalar_draw(self):
        x = sample_stable(1.2, 1.0, 0.01, np.random.default_rng(4))
        assert np.isscalar(x) or np.ndim(x) == 0

    @pytest.mark.parametrize("alpha", [0.0, 2.5])
    def test_rejects_bad_alpha(self, alpha):
        with pytest.raises(ValueError, match="alpha"):
            sample_stable(alpha, 1.0, 0.01, np.random.default_rng(0))

    def test_rejects_bad_scale_dt(self):
        rng = np.random.default_rng(0)
        with pytest.raises(ValueError, match="scale"):
            sample_stable(1.0, -1.0, 0.01, rng)
        with pytest.raises(ValueError, match="dt"):
            sample_stable(1.0, 1.0, 0.0, rng)


class TestSimulateIncrements:
    def test_shape_and_mesh(self, gaussian_model):
        s = simulate_increments(gaussian_model, SimulationConfig(n=50, seed=0))
        assert s.increments.shape == (50, 2)
        assert s.mesh == pytest.approx(0.02)

    def test_deterministic_per_seed(self, jump_model):
        cfg = SimulationConfig(n=100, seed=9)
        a = simulate_increments(jump_model, cfg)
        b = simulate_increments(jump_model, cfg)
        assert np.array_equal(a.increments, b.increments)
        c = simulate_increments(jump_model, SimulationConfig(n=100, seed=10))
        assert not np.array_equal(a.increments, c.increments)

    def test_pure_drift(self):
        model = LevyModel(cov=np.zeros((2, 2)), drift=np.array([1.0, -2.0]))
        s = simulate_increments(model, SimulationConfig(n=40, seed=0))
        assert np.allclose(s.increments, np.array([1.0, -2.0]) / 40, atol=1e-15)

    def test_gaussian_reduction(self, gaussian_model, ref_cov):
        # n * (sample covariance of increments) -> cov; averaged over seeds
        # each entry should sit within 5 * sqrt(2/n) * max|cov| of the truth
        n, n_seeds = 1000, 20
        acc = np.zeros((2, 2))
        for seed in range(n_seeds):
            s = simulate_increments(gaussian_model, SimulationConfig(n=n, seed=seed))
            acc += n * np.cov(s.increments.T, bias=True)
        acc /= n_seeds
        tol = 5.0 * np.sqrt(2.0 / n) * np.abs(ref_cov).max()
        assert np.all(np.abs(acc - ref_cov) <= tol)

    def test_jump_axis_isolation(self, ref_cov):
        # an axis-1 jump component must not disturb the second coordinate,
        # and the Gaussian block is drawn before any stable draws
        base = LevyModel(cov=ref_cov)
        jumpy = LevyModel(cov=ref_cov,
                          jumps=(StableComponent(alpha=0.8, scale=0.5, axis=1),))
        cfg = SimulationConfig(n=200, seed=5)
        a = simulate_increments(base, cfg)
        b = simulate_increments(jumpy, cfg)
        assert np.array_equal(a.dx2, b.dx2)
        assert not np.array_equal(a.dx1, b.dx1)

    def test_drift_shift(self, gaussian_model, ref_cov):
        shifted = LevyModel(cov=ref_cov, drift=np.array([3.0, -1.0]))
        cfg = SimulationConfig(n=100, seed=1)
        a = simulate_increments(gaussian_model, cfg)
        b = simulate_increments(shifted, cfg)
        assert np.allclose(b.increments - a.increments,
                           np.array([3.0, -1.0]) / 100, atol=1e-15)


@settings(max_examples=25, deadline=None)
@given(seed=st.integers(0, 2 ** 31), n=st.integers(2, 64))
def test_simulation_is_finite(seed, n):
    model = LevyModel(cov=np.array([[1.0, 0.5], [0.5, 1.0]]),
                      jumps=(StableComponent(alpha=0.4, scale=1.0, axis=2),))
    s = simulate_increments(model, SimulationConfig(n=n, seed=seed))
    assert np.all(np.isfinite(s.increments))
    assert s.n == n
