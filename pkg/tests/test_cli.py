import json
import os
import subprocess
import sys

import numpy as np
import pytest

from actlab import cli


def run_cli(*argv, env=None):
    """Invoke the CLI in-process, capturing stdout."""
    import contextlib
    import io
    buf = io.StringIO()
    environ_backup = dict(os.environ)
    if env:
        os.environ.update(env)
    try:
        with contextlib.redirect_stdout(buf):
            code = cli.main(list(argv))
    finally:
        os.environ.clear()
        os.environ.update(environ_backup)
    return code, buf.getvalue()


class TestEval:
    def test_logistic_at_zero(self):
        code, out = run_cli("eval", "--fn", "logistic", "--x", "0")
        assert code == 0 and out.strip() == "0.500000000000"

    def test_selu_default_scale(self):
        code, out = run_cli("eval", "--fn", "selu", "--x", "1")
        assert code == 0 and out.strip() == "1.05070000000"

    def test_unknown_kind_exits_2(self):
        code, _ = run_cli("eval", "--fn", "nosuch", "--x", "0")
        assert code == 2

    def test_missing_x_exits_2(self):
        code, _ = run_cli("eval", "--fn", "relu")
        assert code == 2

    def test_bad_param_exits_2(self):
        code, _ = run_cli("eval", "--fn", "prelu", "--x", "1", "--param", "alpha")
        assert code == 2
        code, _ = run_cli("eval", "--fn", "prelu", "--x", "1", "--param", "alpha=zz")
        assert code == 2

    def test_invalid_param_value_exits_2(self):
        code, _ = run_cli("eval", "--fn", "psf", "--x", "0", "--param", "m=-2")
        assert code == 2


class TestTable:
    def test_mish_row_count(self, tmp_path):
        out = tmp_path / "mish.csv"
        code, _ = run_cli("table", "--fn", "mish", "--from", "-5", "--to", "5",
                          "--step", "0.1", "--out", str(out))
        assert code == 0
        rows = [l for l in out.read_text().splitlines()
                if l and not l.startswith("#") and not l.startswith("x,")]
        assert len(rows) == 101

    def test_silu_minimum_visible(self, tmp_path):
        out = tmp_path / "silu.csv"
        run_cli("table", "--fn", "silu", "--from", "-5", "--to", "5",
                "--step", "0.01", "--out", str(out))
        values = [float(l.split(",")[1]) for l in out.read_text().splitlines()[1:]]
        assert min(values) == pytest.approx(-0.28, abs=0.01)

    def test_relu_derivative_column(self, tmp_path):
        out = tmp_path / "relu.csv"
        run_cli("table", "--fn", "relu", "--from", "-1", "--to", "1",
                "--step", "0.25", "--subgradient", "0.5", "--out", str(out))
        lines = out.read_text().splitlines()
        assert any(l.startswith("# kink at x=0.0") for l in lines)
        d = {float(l.split(",")[0]): float(l.split(",")[2])
             for l in lines if l and not l.startswith(("#", "x,"))}
        assert d[0.0] == 0.5            # the requested convention, exactly
        assert set(d.values()) == {0.0, 0.5, 1.0}

    def test_inverted_range_exits_2(self):
        code, _ = run_cli("table", "--fn", "relu", "--from", "2", "--to", "-2")
        assert code == 2


class TestGradCheckCommand:
    def test_single_kind_passes(self):
        code, out = run_cli("grad-check", "--fn", "swish")
        assert code == 0
        assert "beta=" in out          # the learnable-parameter check is reported

    def test_relu_reports_excluded_kink(self):
        code, out = run_cli("grad-check", "--fn", "relu")
        assert code == 0 and "PASS" in out
        assert "excluded_kinks=0" in out

    def test_impossible_tolerance_exits_1(self):
        code, out = run_cli("grad-check", "--fn", "tanh", "--tol", "1e-30")
        assert code == 1 and "FAIL" in out

    def test_requires_target(self):
        code, _ = run_cli("grad-check")
        assert code == 2


class TestExperimentCommand:
    def test_regression_outputs_and_determinism(self, tmp_path):
        d1, d2 = tmp_path / "r1", tmp_path / "r2"
        for d in (d1, d2):
            code, _ = run_cli("experiment", "regression", "--fn", "relu",
                              "--seed", "42", "--rounds", "3", "--out", str(d))
            assert code == 0
        m = json.loads((d1 / "metrics.json").read_text())
        assert len(m["round_loss"]) == 3
        assert (d1 / "metrics.json").read_bytes() == (d2 / "metrics.json").read_bytes()

    def test_classification_confusion_totals(self, tmp_path):
        d = tmp_path / "cls"
        code, _ = run_cli("experiment", "classification", "--fn", "tanh",
                          "--seed", "42", "--rounds", "3", "--out", str(d))
        assert code == 0
        rows = (d / "confusion.csv").read_text().splitlines()[1:]
        total = sum(int(float(v)) for row in rows for v in row.split(",")[1:])
        assert total == 200

    def test_af_seed_env_fallback(self, tmp_path):
        d1 = tmp_path / "e1"
        d2 = tmp_path / "e2"
        code, _ = run_cli("experiment", "regression", "--fn", "relu",
                          "--rounds", "2", "--out", str(d1), env={"AF_SEED": "7"})
        assert code == 0
        run_cli("experiment", "regression", "--fn", "relu", "--seed", "7",
                "--rounds", "2", "--out", str(d2))
        assert (d1 / "metrics.json").read_bytes() == (d2 / "metrics.json").read_bytes()

    def test_flag_beats_env(self, tmp_path):
        d = tmp_path / "e3"
        run_cli("experiment", "regression", "--fn", "relu", "--seed", "3",
                "--rounds", "2", "--out", str(d), env={"AF_SEED": "9"})
        assert json.loads((d / "config.json").read_text())["seed"] == 3


class TestLandscapeCommand:
    def test_row_count(self, tmp_path):
        d = tmp_path / "land"
        code, _ = run_cli("landscape", "--fn", "swish", "--seed", "1",
                          "--resolution", "64", "--out", str(d))
        assert code == 0
        rows = (d / "landscape.csv").read_text().splitlines()
        assert rows[0] == "x,y,value"
        assert len(rows) == 1 + 64 * 64

    def test_full_resolution_grid(self, tmp_path):
        d = tmp_path / "land200"
        code, _ = run_cli("landscape", "--fn", "swish", "--seed", "1",
                          "--resolution", "200", "--out", str(d))
        assert code == 0
        rows = (d / "landscape.csv").read_text().splitlines()
        assert len(rows) == 1 + 40_000


class TestPlotRoundTrips:
    def test_every_emitted_csv_plots(self, tmp_path):
        reg = tmp_path / "reg"
        cls = tmp_path / "cls"
        land = tmp_path / "land"
        tab = tmp_path / "table.csv"
        run_cli("experiment", "regression", "--fn", "relu", "--seed", "1",
                "--rounds", "2", "--out", str(reg))
        run_cli("experiment", "classification", "--fn", "relu", "--seed", "1",
                "--rounds", "2", "--out", str(cls))
        run_cli("landscape", "--fn", "relu", "--seed", "1",
                "--resolution", "24", "--out", str(land))
        run_cli("table", "--fn", "relu", "--from", "-2", "--to", "2",
                "--step", "0.1", "--out", str(tab))
        emitted = [reg / "metrics.csv", cls / "metrics.csv", cls / "confusion.csv",
                   cls / "boundary.csv", land / "landscape.csv", tab]
        for path in emitted:
            out = tmp_path / (path.stem + ".svg")
            code, _ = run_cli("plot", str(path), "--out", str(out))
            assert code == 0, path
            text = out.read_text()
            assert text.startswith("<svg") and text.rstrip().endswith("</svg>")


def test_console_entry_point_runs():
    proc = subprocess.run([sys.executable, "-m", "actlab.cli", "eval",
                           "--fn", "tanh", "--x", "0.5"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.strip() == "0.462117157260"
