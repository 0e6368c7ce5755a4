"""Reproductions of the training-dynamics experiments and the
output-landscape smoothness study.

Regression: fit y = exp(-x^2) + noise on a dense 1-d grid with a 3x10
hidden-layer net. Classification: label points in the unit disk by radius
with a 2x5 net, sigmoid output and threshold decode. Landscape: evaluate a
randomly initialized 3-hidden-layer net over a 2-d grid and score the
roughness of the resulting surface.
"""

import csv
import io
import json
import os
from dataclasses import dataclass

import numpy as np

from . import netlab
from .context import EvalContext
from .errors import ActivationError

_SEED_DATA = 11
_SEED_SPLIT = 12
_SEED_INIT = 13


def _sub_seed(seed, tag):
    return np.random.SeedSequence((int(seed), tag))


@dataclass
class RegressionConfig:
    seed: int = 42
    noise_std: float = 0.15
    x_min: float = -3.0
    x_max: float = 3.0
    step: float = 0.01
    hidden: tuple = (10, 10, 10)
    lr: float = 0.01
    batch_size: int = 64
    rounds: int = 50
    val_fraction: float = 0.2

    def to_dict(self):
        return {"task": "regression", "seed": self.seed, "noise_std": self.noise_std,
                "x_min": self.x_min, "x_max": self.x_max, "step": self.step,
                "hidden": list(self.hidden), "lr": self.lr,
                "batch_size": self.batch_size, "rounds": self.rounds,
                "val_fraction": self.val_fraction}


@dataclass
class ClassificationConfig:
    seed: int = 42
    n_points: int = 1000
    inner_radius: float = 0.5
    hidden: tuple = (5, 5)
    lr: float = 0.01
    batch_size: int = 64
    rounds: int = 50
    val_fraction: float = 0.2
    boundary_resolution: int = 200

    def to_dict(self):
        return {"task": "classification", "seed": self.seed, "n_points": self.n_points,
                "inner_radius": self.inner_radius, "hidden": list(self.hidden),
                "lr": self.lr, "batch_size": self.batch_size, "rounds": self.rounds,
                "val_fraction": self.val_fraction,
                "boundary_resolution": self.boundary_resolution}


@dataclass
class LandscapeConfig:
    seed: int = 0
    resolution: int = 200
    width: int = 16
    depth: int = 3
    lo: float = -2.0
    hi: float = 2.0

    def to_dict(self):
        return {"task": "landscape", "seed": self.seed, "resolution": self.resolution,
                "width": self.width, "depth": self.depth, "lo": self.lo, "hi": self.hi}


def gen_regression_data(cfg):
    """Noisy bell-curve samples: y = exp(-x^2) + N(0, noise_std) on the grid."""
    n = int(round((cfg.x_max - cfg.x_min) / cfg.step)) + 1
    x = cfg.x_min + cfg.step * np.arange(n)
    rng = np.random.default_rng(_sub_seed(cfg.seed, _SEED_DATA))
    y = np.exp(-x * x) + rng.normal(0.0, cfg.noise_std, size=n)
    return x.reshape(-1, 1), y.reshape(-1, 1)


def gen_disk_data(cfg):
    """Area-uniform points in the unit disk; label 1 iff radius < inner_radius.

    r = sqrt(u) makes the density uniform over area rather than over radius.
    """
    rng = np.random.default_rng(_sub_seed(cfg.seed, _SEED_DATA))
    u = rng.random(cfg.n_points)
    theta = rng.uniform(0.0, 2.0 * np.pi, cfg.n_points)
    r = np.sqrt(u)
    X = np.stack([r * np.cos(theta), r * np.sin(theta)], axis=1)
    y = (r < cfg.inner_radius).astype(float).reshape(-1, 1)
    return X, y


def split_train_val(X, y, fraction, seed):
    """Seeded shuffle split; `fraction` goes to validation."""
    n = X.shape[0]
    rng = np.random.default_rng(_sub_seed(seed, _SEED_SPLIT))
    order = rng.permutation(n)
    n_val = int(round(n * fraction))
    val, train = order[:n_val], order[n_val:]
    return X[train], y[train], X[val], y[val]


@dataclass
class RegressionResult:
    config: dict
    kind: str
    params: dict
    metrics: netlab.MetricLog
    net: netlab.Network


@dataclass
class ClassificationResult:
    config: dict
    kind: str
    params: dict
    metrics: netlab.MetricLog
    net: netlab.Network
    confusion: tuple        # final-round (tp, fp, fn, tn)
    boundary: np.ndarray    # (res*res, 3) columns x1, x2, predicted label
    disk_class1_fraction: float


def run_regression(kind, params=None, cfg=None):
    cfg = cfg or RegressionConfig()
    X, y = gen_regression_data(cfg)
    Xt, yt, Xv, yv = split_train_val(X, y, cfg.val_fraction, cfg.seed)
    widths = [1, *cfg.hidden, 1]
    net = netlab.init_glorot(widths, _sub_seed(cfg.seed, _SEED_INIT),
                             activation=kind, act_params=params,
                             decoder=netlab.DECODER_LINEAR)
    log = netlab.train(net, Xt, yt, Xv, yv, loss="mse", rounds=cfg.rounds,
                       batch_size=cfg.batch_size, lr=cfg.lr, optimizer="adam",
                       seed=cfg.seed)
    from .catalog import validate_params
    return RegressionResult(cfg.to_dict(), kind, validate_params(kind, params),
                            log, net)


def decision_boundary_grid(net, resolution=200, lo=-1.0, hi=1.0):
    """Predicted label over a resolution x resolution lattice on [lo, hi]^2."""
    axis = np.linspace(lo, hi, resolution)
    xx, yy = np.meshgrid(axis, axis)
    pts = np.stack([xx.ravel(), yy.ravel()], axis=1)
    prob, _ = netlab.forward(net, pts, EvalContext.eval_mode())
    label = (prob.ravel() > 0.5).astype(int)
    return np.column_stack([pts, label])


def class1_area_fraction(boundary):
    """Fraction of unit-disk lattice points predicted as class 1."""
    x1, x2, label = boundary[:, 0], boundary[:, 1], boundary[:, 2]
    inside = x1 * x1 + x2 * x2 <= 1.0
    return float(np.mean(label[inside]))


def run_classification(kind, params=None, cfg=None):
    cfg = cfg or ClassificationConfig()
    X, y = gen_disk_data(cfg)
    Xt, yt, Xv, yv = split_train_val(X, y, cfg.val_fraction, cfg.seed)
    widths = [2, *cfg.hidden, 1]
    net = netlab.init_glorot(widths, _sub_seed(cfg.seed, _SEED_INIT),
                             activation=kind, act_params=params,
                             decoder=netlab.DECODER_SIGMOID)
    log = netlab.train(net, Xt, yt, Xv, yv, loss="bce", rounds=cfg.rounds,
                       batch_size=cfg.batch_size, lr=cfg.lr, optimizer="adam",
                       seed=cfg.seed, classify=True)
    boundary = decision_boundary_grid(net, cfg.boundary_resolution)
    from .catalog import validate_params
    return ClassificationResult(cfg.to_dict(), kind, validate_params(kind, params),
                                log, net, tuple(log.confusion[-1]), boundary,
                                class1_area_fraction(boundary))


def output_landscape(kind, params=None, cfg=None, seed=None):
    """Scalar outputs of a freshly initialized net over the input grid.

    No training happens; the surface reflects the activation's effect on a
    random network. Same seed and kind give the identical grid.
    """
    cfg = cfg or LandscapeConfig()
    if seed is None:
        seed = cfg.seed
    if cfg.resolution < 16:
        raise ActivationError("landscape resolution must be >= 16")
    widths = [2] + [cfg.width] * cfg.depth + [1]
    net = netlab.init_glorot(widths, _sub_seed(seed, _SEED_INIT),
                             activation=kind, act_params=params)
    axis = np.linspace(cfg.lo, cfg.hi, cfg.resolution)
    xx, yy = np.meshgrid(axis, axis)
    pts = np.stack([xx.ravel(), yy.ravel()], axis=1)
    out, _ = netlab.forward(net, pts, EvalContext.eval_mode())
    return out.reshape(cfg.resolution, cfg.resolution)


def roughness(grid, spacing=1.0):
    """Mean |discrete Laplacian| over interior points, divided by spacing^2.

    Flat and planar surfaces score 0; crease lines contribute slope jumps.
    """
    g = np.asarray(grid, dtype=float)
    if g.ndim != 2 or g.shape[0] < 3 or g.shape[1] < 3:
        raise ActivationError("roughness needs a grid of at least 3x3")
    lap = (g[2:, 1:-1] + g[:-2, 1:-1] + g[1:-1, 2:] + g[1:-1, :-2]
           - 4.0 * g[1:-1, 1:-1])
    return float(np.mean(np.abs(lap)) / (spacing * spacing))


def landscape_roughness(kind, params=None, cfg=None, seed=None):
    cfg = cfg or LandscapeConfig()
    grid = output_landscape(kind, params, cfg, seed)
    spacing = (cfg.hi - cfg.lo) / (cfg.resolution - 1)
    return roughness(grid, spacing)


# run-directory output files --------------------------------------------------


def _csv_text(rows):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    for row in rows:
        w.writerow([repr(float(v)) if isinstance(v, float) else v for v in row])
    return buf.getvalue()


def write_run_dir(out_dir, config, metrics=None, confusion=None, boundary=None,
                  landscape=None, landscape_extent=None, status="ok"):
    """Write the standard file layout for one experiment run.

    config.json always; metrics.json / metrics.csv when a MetricLog exists;
    confusion.csv, boundary.csv (x1, x2, label) and landscape.csv
    (x, y, value) when applicable. Identical inputs produce byte-identical
    files.
    """
    os.makedirs(out_dir, exist_ok=True)
    cfg = dict(config)
    cfg["status"] = status
    with open(os.path.join(out_dir, "config.json"), "w") as fh:
        fh.write(json.dumps(cfg, sort_keys=True, indent=2) + "\n")
    if metrics is not None:
        with open(os.path.join(out_dir, "metrics.json"), "w") as fh:
            fh.write(metrics.to_json() + "\n")
        with open(os.path.join(out_dir, "metrics.csv"), "w") as fh:
            fh.write(_csv_text(metrics.csv_rows()))
    if confusion is not None:
        tp, fp, fn, tn = confusion
        rows = [["", "pred_1", "pred_0"], ["actual_1", tp, fn], ["actual_0", fp, tn]]
        with open(os.path.join(out_dir, "confusion.csv"), "w") as fh:
            fh.write(_csv_text(rows))
    if boundary is not None:
        rows = [["x1", "x2", "label"]]
        rows += [[repr(float(a)), repr(float(b)), int(l)] for a, b, l in boundary]
        with open(os.path.join(out_dir, "boundary.csv"), "w") as fh:
            fh.write(_csv_text(rows))
    if landscape is not None:
        lo, hi = landscape_extent if landscape_extent else (-2.0, 2.0)
        res = landscape.shape[0]
        axis = np.linspace(lo, hi, res)
        rows = [["x", "y", "value"]]
        for iy in range(res):
            for ix in range(res):
                rows.append([repr(float(axis[ix])), repr(float(axis[iy])),
                             repr(float(landscape[iy, ix]))])
        with open(os.path.join(out_dir, "landscape.csv"), "w") as fh:
            fh.write(_csv_text(rows))
