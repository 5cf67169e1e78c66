"""Model containers: validation, derived quantities, config loading."""
import numpy as np
import pytest

from levycov import (
    IncrementSample,
    LevyModel,
    SimulationConfig,
    StableComponent,
    load_model_config,
    model_from_dict,
)


class TestStableComponent:
    def test_valid(self):
        c = StableComponent(alpha=1.5, scale=0.3, axis=2)
        assert (c.alpha, c.scale, c.axis) == (1.5, 0.3, 2)

    @pytest.mark.parametrize("alpha", [0.0, -0.5, 2.1])
    def test_alpha_range(self, alpha):
        with pytest.raises(ValueError, match="alpha"):
            StableComponent(alpha=alpha, scale=1.0, axis=1)

    def test_negative_scale(self):
        with pytest.raises(ValueError, match="scale"):
            StableComponent(alpha=1.0, scale=-0.1, axis=1)

    @pytest.mark.parametrize("axis", [0, 3])
    def test_axis(self, axis):
        with pytest.raises(ValueError, match="axis"):
            StableComponent(alpha=1.0, scale=1.0, axis=axis)


class TestLevyModel:
    def test_derived_quantities(self, gaussian_model):
        assert gaussian_model.c12 == 1.0
        assert gaussian_model.cov_sum == 5.0          # 2 + 1 + 1 + 1
        assert gaussian_model.cov_antidiag == 1.0     # 2 + 1 - 2*1
        assert gaussian_model.class_bound() == 3.0    # max abs row sum

    def test_rejects_asymmetric(self):
        with pytest.raises(ValueError, match="symmetric"):
            LevyModel(cov=np.array([[1.0, 0.5], [0.2, 1.0]]))

    def test_rejects_indefinite(self):
        with pytest.raises(ValueError, match="semi-definite"):
            LevyModel(cov=np.array([[1.0, 2.0], [2.0, 1.0]]))

    def test_rejects_bad_shapes(self):
        with pytest.raises(ValueError, match="2x2"):
            LevyModel(cov=np.eye(3))
        with pytest.raises(ValueError, match="2-vector"):
            LevyModel(cov=np.eye(2), drift=np.zeros(3))

    def test_zero_cov_allowed(self):
        m = LevyModel(cov=np.zeros((2, 2)))
        assert m.cov_sum == 0.0


class TestSimulationConfig:
    def test_valid(self):
        cfg = SimulationConfig(n=100, seed=7)
        assert cfg.horizon == 1.0

    def test_n_too_small(self):
        with pytest.raises(ValueError, match="n"):
            SimulationConfig(n=1, seed=0)

    def test_horizon_fixed(self):
        with pytest.raises(ValueError, match="horizon"):
            SimulationConfig(n=10, seed=0, horizon=2.0)


class TestIncrementSample:
    def test_properties(self):
        inc = np.array([[1.0, 2.0], [3.0, 4.0], [5.0, 6.0]])
        s = IncrementSample(increments=inc)
        assert s.n == 3
        assert s.mesh == pytest.approx(1.0 / 3.0)
        assert np.array_equal(s.dx1, [1.0, 3.0, 5.0])
        assert np.array_equal(s.dx2, [2.0, 4.0, 6.0])

    def test_rejects_bad_shape(self):
        with pytest.raises(ValueError, match="shape"):
            IncrementSample(increments=np.zeros((3, 3)))

    def test_rejects_nonfinite(self):
        with pytest.raises(ValueError, match="finite"):
            IncrementSample(increments=np.array([[0.0, np.nan]]))


class TestConfigLoading:
    def test_model_from_dict(self, ref_cov):
        d = {"cov": ref_cov.tolist(), "drift": [0.5, -0.5],
             "jumps": [{"alpha": 0.5, "scale": 0.3, "axis": 1}]}
        m = model_from_dict(d)
        assert np.array_equal(m.cov, ref_cov)
        assert np.array_equal(m.drift, [0.5, -0.5])
        assert m.jumps == (StableComponent(alpha=0.5, scale=0.3, axis=1),)

    def test_defaults(self):
        m = model_from_dict({"cov": [[1.0, 0.0], [0.0, 1.0]]})
        assert np.array_equal(m.drift, [0.0, 0.0])
        assert m.jumps == ()

    def test_load_yaml(self, tmp_path, ref_cov):
        cfg = tmp_path / "model.yaml"
        cfg.write_text(
            "cov: [[2.0, 1.0], [1.0, 1.0]]\n"
            "drift: [0.0, 0.0]\n"
            "jumps:\n"
            "  - {alpha: 1.5, scale: 0.2, axis: 2}\n"
            "n: 250\n"
            "seed: 11\n")
        model, raw = load_model_config(cfg)
        assert np.array_equal(model.cov, ref_cov)
        assert model.jumps[0].axis == 2
        assert raw["n"] == 250 and raw["seed"] == 11

    def test_load_rejects_non_mapping(self, tmp_path):
        cfg = tmp_path / "bad.yaml"
        cfg.write_text("- 1\n- 2\n")
        with pytest.raises(ValueError, match="mapping"):
            load_model_config(cfg)
