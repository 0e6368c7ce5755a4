import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from actlab import catalog, gradients
from actlab.catalog import mish_derivative_rational
from actlab.errors import KinkError


class TestGradPoints:
    def test_logistic_slope_at_origin(self):
        assert gradients.grad("logistic", 0.0).d_dx == 0.25

    def test_tanh_slope_at_origin(self):
        assert gradients.grad("tanh", 0.0).d_dx == 1.0

    def test_lisht_zero_gradient_only_at_origin(self):
        assert gradients.grad("lisht", 0.0).d_dx == 0.0

    def test_frelu_bias_partial_is_one(self):
        for x in (-3.0, 0.5, 7.0):
            assert gradients.grad("frelu", x).d_dparam["b"] == 1.0

    def test_prelu_slope_partial(self):
        g = gradients.grad("prelu", -2.0, {"alpha": 0.2})
        assert g.d_dparam["alpha"] == -2.0

    def test_sshape_right_slope_partial(self):
        g = gradients.grad("s_shaped_relu", 1.0, {"r": 0.4, "a": 2.0})
        assert g.d_dparam["a"] == pytest.approx(0.6)

    def test_value_matches_evaluate(self):
        for kind in ("mish", "bif", "srs", "mtlu"):
            for x in (-2.3, 0.4, 3.1):
                g = gradients.grad(kind, x)
                assert g.value == catalog.evaluate(kind, x)

    def test_d_dparam_keys_are_exactly_the_learnables(self):
        for kind in catalog.kind_names():
            g = gradients.grad(kind, 0.37)
            assert set(g.d_dparam) == set(catalog.learnable_params(kind))


class TestSubgradientConvention:
    def test_relu_conventions(self):
        for c in (0.0, 0.5, 1.0):
            assert gradients.grad("relu", 0.0, subgradient=c).d_dx == c

    def test_relu_right_derivative(self):
        # slope 1 approached from the right, per the origin-slope tables
        assert gradients.grad("relu", 0.0, subgradient=1.0).d_dx == 1.0

    def test_leaky_relu_blend(self):
        g = gradients.grad("leaky_relu", 0.0, {"alpha": 0.1}, subgradient=0.5)
        assert g.d_dx == pytest.approx(0.55)

    def test_default_lies_in_subdifferential(self):
        d = gradients.grad("relu", 0.0).d_dx
        assert 0.0 <= d <= 1.0

    def test_strict_mode_raises_at_kink(self):
        with pytest.raises(KinkError):
            gradients.grad("relu", 0.0, strict=True)
        with pytest.raises(KinkError):
            gradients.grad("hard_tanh", 1.0 + 1e-10, strict=True)
        gradients.grad("hard_tanh", 1.1, strict=True)   # clear of the kink

    def test_bad_convention_rejected(self):
        with pytest.raises(ValueError):
            gradients.grad("relu", 0.0, subgradient=1.5)


class TestFdOracle:
    def test_tanh_slope(self):
        assert gradients.fd_oracle("tanh", 0.0, h=1e-5) == pytest.approx(1.0, abs=1e-8)

    def test_swish_matches_analytic(self):
        a = gradients.grad("swish", 1.5, {"beta": 1.0}).d_dx
        f = gradients.fd_oracle("swish", 1.5, {"beta": 1.0}, h=1e-5)
        assert f == pytest.approx(a, abs=1e-6)

    def test_relu_away_from_kink(self):
        assert gradients.fd_oracle("relu", 0.5, h=1e-5) == pytest.approx(1.0, abs=1e-9)

    def test_step_bounds(self):
        with pytest.raises(ValueError):
            gradients.fd_oracle("tanh", 0.0, h=1e-2)
        with pytest.raises(ValueError):
            gradients.fd_oracle("tanh", 0.0, h=1e-9)

    def test_kink_proximity_rejected(self):
        with pytest.raises(KinkError):
            gradients.fd_oracle("relu", 5e-6, h=1e-6)


class TestGradCheck:
    @pytest.mark.parametrize("kind", ["mish", "gelu_erf"])
    def test_smooth_kinds_pass(self, kind):
        r = gradients.grad_check(kind, domain=(-5, 5), n=1000, tol=1e-5)
        assert r.passed and r.samples >= 990

    def test_mtlu_passes_outside_anchor_guards(self):
        r = gradients.grad_check("mtlu", domain=(-2, 2), n=1000, tol=1e-5)
        assert r.passed
        assert r.excluded_kinks == (-0.5, 0.0, 0.5)

    def test_swish_report_covers_beta(self):
        r = gradients.grad_check("swish")
        assert "beta" in r.target_errors

    def test_sample_floor(self):
        with pytest.raises(ValueError):
            gradients.grad_check("tanh", n=10)

    def test_failure_reported_not_raised(self):
        r = gradients.grad_check("tanh", tol=1e-30)
        assert not r.passed


def test_every_kind_passes_with_default_and_perturbed_params():
    for kind in catalog.kind_names():
        for ps in gradients.param_sets_for(kind):
            r = gradients.grad_check(kind, ps)
            assert r.passed, (kind, ps, r.max_rel_err, r.worst_x, r.worst_target)


def test_dsilu_is_silu_derivative():
    xs = np.linspace(-8.0, 8.0, 801)
    for x in xs:
        assert catalog.evaluate("dsilu", float(x)) == pytest.approx(
            gradients.grad("silu", float(x)).d_dx, abs=1e-12)


def test_softplus_derivative_is_logistic():
    xs = np.linspace(-10.0, 10.0, 401)
    d = gradients.grad("softplus", xs).d_dx
    s = catalog.evaluate("logistic", xs)
    assert np.max(np.abs(d - s)) < 1e-12


def test_elu_derivative_recurrence():
    # on the saturating side the slope equals value + alpha
    for alpha in (0.5, 1.0, 2.0):
        xs = np.linspace(-10.0, -1e-3, 300)
        g = gradients.grad("elu", xs, {"alpha": alpha})
        assert np.max(np.abs(g.d_dx - (g.value + alpha))) < 1e-12


def test_mish_rational_derivative_form():
    xs = np.linspace(-5.0, 5.0, 1001)
    chain = gradients.grad("mish", xs).d_dx
    rational = mish_derivative_rational(xs)
    assert np.max(np.abs(chain - rational)) < 1e-10


def test_quasi_random_is_deterministic_and_in_range():
    a = gradients.quasi_random(1000, -5, 5)
    b = gradients.quasi_random(1000, -5, 5)
    assert np.array_equal(a, b)
    assert a.min() >= -5 and a.max() <= 5


@given(x=st.floats(-20, 20), kind=st.sampled_from(catalog.kind_names()))
@settings(max_examples=200, deadline=None)
def test_grad_value_agrees_with_evaluate(kind, x):
    g = gradients.grad(kind, x)
    assert g.value == catalog.evaluate(kind, x)
    assert math.isfinite(g.d_dx)
