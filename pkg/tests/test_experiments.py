import json
import os

import numpy as np
import pytest

from actlab import experiments as ex
from actlab.errors import ActivationError


class TestRegressionData:
    def test_point_count(self):
        X, y = ex.gen_regression_data(ex.RegressionConfig(seed=0))
        assert X.shape == (601, 1) and y.shape == (601, 1)
        np.testing.assert_allclose(X[0, 0], -3.0)
        np.testing.assert_allclose(X[-1, 0], 3.0)

    def test_noiseless_component_peaks_at_one(self):
        X, y = ex.gen_regression_data(ex.RegressionConfig(seed=0))
        clean = np.exp(-X ** 2)
        assert clean[X == 0.0] == pytest.approx(1.0)

    def test_noise_scale(self):
        X, y = ex.gen_regression_data(ex.RegressionConfig(seed=3))
        resid = (y - np.exp(-X ** 2)).ravel()
        assert np.std(resid) == pytest.approx(0.15, abs=0.02)
        assert np.mean(resid) == pytest.approx(0.0, abs=0.02)

    def test_deterministic(self):
        a = ex.gen_regression_data(ex.RegressionConfig(seed=5))
        b = ex.gen_regression_data(ex.RegressionConfig(seed=5))
        np.testing.assert_array_equal(a[1], b[1])


class TestDiskData:
    def test_inside_unit_disk(self):
        X, y = ex.gen_disk_data(ex.ClassificationConfig(seed=0))
        assert X.shape == (1000, 2)
        assert np.all(np.hypot(X[:, 0], X[:, 1]) <= 1.0)

    def test_class_balance_matches_area_ratio(self):
        fractions = [ex.gen_disk_data(ex.ClassificationConfig(seed=s))[1].mean()
                     for s in range(5)]
        for f in fractions:
            assert f == pytest.approx(0.25, abs=0.05)

    def test_labels_match_radius(self):
        X, y = ex.gen_disk_data(ex.ClassificationConfig(seed=1))
        r = np.hypot(X[:, 0], X[:, 1])
        np.testing.assert_array_equal(y.ravel(), (r < 0.5).astype(float))

    def test_deterministic(self):
        a = ex.gen_disk_data(ex.ClassificationConfig(seed=9))[0]
        b = ex.gen_disk_data(ex.ClassificationConfig(seed=9))[0]
        np.testing.assert_array_equal(a, b)


class TestRuns:
    def test_regression_metric_counts(self):
        cfg = ex.RegressionConfig(seed=1, rounds=3)
        res = ex.run_regression("tanh", cfg=cfg)
        assert res.metrics.rounds == 3
        # 481 training samples in 64-batches: 8 per round, partial kept
        assert len(res.metrics.grad_rms_per_batch) == 3 * 8
        assert all(len(r) == 4 for r in res.metrics.grad_rms_per_round)

    def test_classification_confusion_totals(self):
        cfg = ex.ClassificationConfig(seed=1, rounds=3)
        res = ex.run_classification("relu", cfg=cfg)
        for row in res.metrics.confusion:
            assert sum(row) == 200    # validation split of the 1000 points
        assert res.boundary.shape == (cfg.boundary_resolution ** 2, 3)

    def test_split_is_disjoint_and_seeded(self):
        X, y = ex.gen_disk_data(ex.ClassificationConfig(seed=2))
        Xt, yt, Xv, yv = ex.split_train_val(X, y, 0.2, 2)
        assert Xt.shape[0] == 800 and Xv.shape[0] == 200
        again = ex.split_train_val(X, y, 0.2, 2)
        np.testing.assert_array_equal(Xv, again[2])


def test_round_loss_falls_for_every_seed_in_family():
    # the bell-curve fit with tanh should always be learning by round 50
    for seed in range(10):
        res = ex.run_regression("tanh", cfg=ex.RegressionConfig(seed=seed))
        assert res.metrics.round_loss[-1] < res.metrics.round_loss[0]


class TestLandscape:
    def test_grid_shape_and_determinism(self):
        cfg = ex.LandscapeConfig(seed=4, resolution=32)
        a = ex.output_landscape("swish", cfg=cfg)
        b = ex.output_landscape("swish", cfg=cfg)
        assert a.shape == (32, 32)
        np.testing.assert_array_equal(a, b)

    def test_linear_activation_gives_planar_surface(self):
        cfg = ex.LandscapeConfig(seed=7, resolution=32)
        grid = ex.output_landscape("identity", cfg=cfg)
        spacing = 4.0 / 31
        assert ex.roughness(grid, spacing) < 1e-8

    def test_resolution_floor(self):
        with pytest.raises(ActivationError):
            ex.output_landscape("relu", cfg=ex.LandscapeConfig(resolution=8))


class TestRoughness:
    def test_constant_grid(self):
        assert ex.roughness(np.full((8, 8), 3.2)) == 0.0

    def test_planar_grid(self):
        xx, yy = np.meshgrid(np.linspace(0, 1, 9), np.linspace(0, 1, 9))
        assert ex.roughness(2 * xx - 3 * yy + 1) == pytest.approx(0.0, abs=1e-13)

    def test_crease_concentrates_curvature(self):
        # |x| sampled on a symmetric grid: the discrete Laplacian is 2h on
        # the crease column and exactly zero elsewhere
        h = 0.25
        axis = np.arange(-1.0, 1.0 + h / 2, h)
        grid = np.abs(np.meshgrid(axis, axis)[0])
        lap = (grid[2:, 1:-1] + grid[:-2, 1:-1] + grid[1:-1, 2:] + grid[1:-1, :-2]
               - 4 * grid[1:-1, 1:-1])
        crease = axis[1:-1] == 0.0
        assert np.all(lap[:, crease] == 2 * h)
        assert np.all(lap[:, ~crease] == 0.0)
        n_interior = len(axis) - 2
        want = (2 * h) * n_interior / (n_interior * n_interior) / h ** 2
        assert ex.roughness(grid, h) == pytest.approx(want)

    def test_undersized_grid(self):
        with pytest.raises(ActivationError):
            ex.roughness(np.zeros((2, 5)))


class TestRunDir:
    def test_files_and_determinism(self, tmp_path):
        cfg = ex.RegressionConfig(seed=2, rounds=2)
        res = ex.run_regression("relu", cfg=cfg)
        d1 = tmp_path / "a"
        d2 = tmp_path / "b"
        for d in (d1, d2):
            ex.write_run_dir(d, res.config, metrics=res.metrics)
        for name in ("config.json", "metrics.json", "metrics.csv"):
            assert (d1 / name).read_bytes() == (d2 / name).read_bytes()
        cfg_json = json.loads((d1 / "config.json").read_text())
        assert cfg_json["status"] == "ok" and cfg_json["seed"] == 2

    def test_boundary_and_confusion_files(self, tmp_path):
        cfg = ex.ClassificationConfig(seed=2, rounds=2, boundary_resolution=20)
        res = ex.run_classification("relu", cfg=cfg)
        ex.write_run_dir(tmp_path, res.config, metrics=res.metrics,
                         confusion=res.confusion, boundary=res.boundary)
        lines = (tmp_path / "boundary.csv").read_text().splitlines()
        assert lines[0] == "x1,x2,label"
        assert len(lines) == 1 + 20 * 20
        conf = (tmp_path / "confusion.csv").read_text().splitlines()
        assert conf[0] == ",pred_1,pred_0"
