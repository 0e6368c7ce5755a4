import json

import numpy as np
import pytest
from scipy.integrate import quad

from actlab import catalog, composite, gradients
from actlab.errors import InvalidParameterError

XS = np.linspace(-6.0, 6.0, 481)


class TestMixed:
    def test_endpoints(self):
        lrelu = catalog.evaluate("leaky_relu", XS)
        elu = catalog.evaluate("elu", XS)
        np.testing.assert_allclose(composite.mixed_eval(1.0, XS), lrelu, atol=0)
        np.testing.assert_allclose(composite.mixed_eval(0.0, XS), elu, atol=0)

    def test_identity_on_positive_axis(self):
        xs = np.linspace(0.01, 8.0, 100)
        np.testing.assert_allclose(composite.mixed_eval(0.5, xs), xs, atol=1e-15)

    def test_blend_bounds(self):
        with pytest.raises(InvalidParameterError):
            composite.MixedActivation(rho=1.3)


class TestGated:
    def test_neutral_gate_is_average(self):
        got = composite.gated_eval(0.0, XS)
        want = 0.5 * (catalog.evaluate("leaky_relu", XS) + catalog.evaluate("elu", XS))
        np.testing.assert_allclose(got, want, atol=1e-15)

    def test_identity_on_positive_axis(self):
        xs = np.linspace(0.01, 8.0, 100)
        np.testing.assert_allclose(composite.gated_eval(3.0, xs), xs, atol=1e-15)

    def test_hand_substitution(self):
        x = -2.0
        tau = 1.0 / (1.0 + np.exp(2.0))
        want = tau * (0.01 * x) + (1 - tau) * (np.exp(x) - 1.0)
        assert composite.gated_eval(1.0, x) == pytest.approx(float(want), abs=1e-12)


class TestHierarchical:
    def test_single_node_reduces_to_gated(self):
        h = composite.HierarchicalActivation(omegas=(0.8,))
        g = composite.GatedActivation(omega=0.8)
        np.testing.assert_allclose(h.value(XS), g.value(XS), atol=0)

    def test_tie_takes_first_node(self):
        h = composite.HierarchicalActivation(omegas=(0.5, 0.5))
        assert np.all(h.winner(XS) == 0)

    def test_two_nodes_max(self):
        h = composite.HierarchicalActivation(omegas=(1.0, -1.0))
        a = composite.GatedActivation(omega=1.0).value(XS)
        b = composite.GatedActivation(omega=-1.0).value(XS)
        np.testing.assert_allclose(h.value(XS), np.maximum(a, b), atol=0)

    def test_gradients_route_to_winner(self):
        h = composite.HierarchicalActivation(omegas=(1.0, -1.0))
        r = gradients.check_composite(h)
        assert r.passed

    def test_identity_on_positive_axis(self):
        xs = np.linspace(0.01, 8.0, 50)
        h = composite.HierarchicalActivation(omegas=(2.0, -3.0, 0.1))
        np.testing.assert_allclose(h.value(xs), xs, atol=1e-15)


class TestHull:
    def test_convex_id_relu_recovers_leaky_relu(self):
        alpha = 0.2
        hull = composite.HullCombination(mode="convex", bases=("identity", "relu"),
                                         coeffs=(alpha, 1 - alpha))
        want = catalog.evaluate("leaky_relu", XS, {"alpha": alpha})
        np.testing.assert_allclose(hull.value(XS), want, atol=1e-15)

    def test_single_base(self):
        hull = composite.HullCombination(mode="convex", bases=("identity", "tanh"),
                                         coeffs=(0.0, 1.0))
        np.testing.assert_allclose(hull.value(XS), np.tanh(XS), atol=0)

    def test_affine_identity_approximation(self):
        hull = composite.HullCombination(mode="affine", bases=("identity", "tanh"),
                                         coeffs=(1.7, -0.7))
        assert hull.value(np.asarray(0.0)) == pytest.approx(0.0, abs=1e-12)
        assert hull.d_dx(np.asarray(0.0)) == pytest.approx(1.0, abs=1e-12)

    def test_constraints(self):
        with pytest.raises(InvalidParameterError, match="sum to 1"):
            composite.HullCombination(coeffs=(0.5, 0.2, 0.2))
        with pytest.raises(InvalidParameterError, match=">= 0"):
            composite.HullCombination(mode="convex", coeffs=(1.5, -0.3, -0.2))
        with pytest.raises(InvalidParameterError, match="base set"):
            composite.HullCombination(bases=("identity", "mish"), coeffs=(0.5, 0.5))

    def test_convex_hull_of_monotone_bases_is_monotone(self):
        rng = np.random.default_rng(8)
        xs = np.linspace(-12.0, 12.0, 2401)
        for _ in range(20):
            c = rng.dirichlet((1.0, 1.0, 1.0))
            hull = composite.HullCombination(mode="convex", coeffs=tuple(c))
            assert np.all(np.diff(hull.value(xs)) >= -1e-12)


class TestAPL:
    def test_hand_value(self):
        apl = composite.APLUnit(a=(0.2,), b=(0.0,))
        assert apl.value(np.asarray(-1.0)) == pytest.approx(0.2)

    def test_zero_slopes_reduce_to_relu(self):
        apl = composite.APLUnit(a=(0.0, 0.0), b=(1.0, -1.0))
        np.testing.assert_allclose(apl.value(XS), np.maximum(0.0, XS), atol=0)

    def test_hinge_partials_match_fd(self):
        apl = composite.APLUnit(a=(0.3, -0.2), b=(0.5, -1.5))
        assert gradients.check_composite(apl).passed


class TestMeLU:
    def test_zero_coeffs_reduce_to_prelu(self):
        melu = composite.MeLUUnit()
        want = catalog.evaluate("prelu", XS, {"alpha": 0.25})
        np.testing.assert_allclose(melu.value(XS), want, atol=0)

    def test_hat_peak_and_support(self):
        assert composite.hat(np.asarray(1.5), 1.5, 0.5) == 0.5
        xs = np.array([0.99, 2.01, -3.0])
        np.testing.assert_array_equal(composite.hat(xs, 1.5, 0.5), 0.0)

    def test_width_must_be_positive(self):
        with pytest.raises(InvalidParameterError):
            composite.MeLUUnit(widths=(0.5,) * 8 + (0.0,))


class TestLuTU:
    def test_exact_at_anchors(self):
        lut = composite.LuTUInterp(x0=-3.0, s=1.0, y=(0.5, -1.0, 2.0, 0.0, 1.0, 3.0, -2.0))
        for i, y in enumerate(lut.y):
            assert lut.value(np.asarray(-3.0 + i)) == pytest.approx(y)

    def test_relu_anchors_reproduce_relu(self):
        lut = composite.LuTUInterp()   # anchors sampled from max(0, x)
        mids = np.arange(-9.5, 10.0, 1.0)
        on_linear = mids[mids >= 0.5]
        np.testing.assert_allclose(lut.value(on_linear), on_linear, atol=1e-12)
        np.testing.assert_allclose(lut.value(mids[mids <= -0.5]), 0.0, atol=1e-12)

    def test_piecewise_linear_inside_segments(self):
        lut = composite.LuTUInterp(x0=-2.0, s=1.0, y=(1.0, -0.5, 2.0, 0.3, -1.0))
        inside = np.linspace(-1.9, -1.1, 30)
        assert np.max(np.abs(np.diff(lut.value(inside), 2))) < 1e-12

    def test_extrapolation_extends_end_slopes(self):
        lut = composite.LuTUInterp(x0=0.0, s=1.0, y=(0.0, 1.0, 3.0))
        assert lut.value(np.asarray(-2.0)) == pytest.approx(-2.0)   # slope 1 held
        assert lut.value(np.asarray(4.0)) == pytest.approx(7.0)     # slope 2 held

    def test_mask_integral_is_one(self):
        for tau in (0.5, 1.0, 2.0):
            integral, err = quad(lambda u: float(composite.cosine_mask(u, tau)),
                                 -tau, tau)
            assert integral == pytest.approx(1.0, abs=1e-6)

    def test_anchor_count_floor(self):
        with pytest.raises(InvalidParameterError):
            composite.LuTUInterp(y=(1.0,))


class TestMoGU:
    def test_normalization_cancels(self):
        m = composite.MoGUUnit(lam=(np.sqrt(2 * np.pi),), mu=(0.0,), sigma=(1.0,))
        assert m.value(np.asarray(0.0)) == pytest.approx(1.0)

    def test_symmetric_pair_is_even(self):
        m = composite.MoGUUnit(lam=(1.0, 1.0), mu=(-1.5, 1.5), sigma=(0.8, 0.8))
        np.testing.assert_allclose(m.value(XS), m.value(-XS), atol=1e-15)

    def test_component_partials_match_fd(self):
        m = composite.MoGUUnit(lam=(0.7, -0.4), mu=(-1.0, 2.0), sigma=(0.6, 1.2))
        assert gradients.check_composite(m).passed

    def test_width_domain(self):
        with pytest.raises(InvalidParameterError):
            composite.MoGUUnit(sigma=(1.0, 0.0))


class TestBDAA:
    def test_variant1_zero_shift_is_logistic(self):
        b = composite.BDAAUnit(variant=1, a=0.0)
        np.testing.assert_allclose(b.value(XS), catalog.evaluate("logistic", XS), atol=0)

    def test_variant4_is_odd(self):
        for a in (0.0, 0.7, 2.5):
            b = composite.BDAAUnit(variant=4, a=a)
            np.testing.assert_allclose(b.value(XS), -b.value(-XS), atol=1e-15)

    def test_variant3_derivative_peaks_near_shifts(self):
        # the twin peaks sit within ~8 e^{-2a} of +-a; use a shift large
        # enough that 1e-3 localization is meaningful
        a = 6.0
        b = composite.BDAAUnit(variant=3, a=a)
        xs = np.linspace(0.0, 2 * a, 2_000_001)
        d = b.d_dx(xs)
        peak = xs[np.argmax(d)]
        assert peak == pytest.approx(a, abs=1e-3)

    def test_limits(self):
        for variant, (lo, hi) in ((1, (0.0, 1.0)), (2, (-0.5, 0.5)),
                                  (3, (0.0, 1.0)), (4, (-0.5, 0.5))):
            b = composite.BDAAUnit(variant=variant, a=1.5)
            assert b.value(np.asarray(60.0)) == pytest.approx(hi, abs=1e-6)
            assert b.value(np.asarray(-60.0)) == pytest.approx(lo, abs=1e-6)

    def test_monotone_for_any_shift(self):
        for variant, a in ((1, 5.0), (2, -3.0), (3, 2.0), (4, 7.0)):
            b = composite.BDAAUnit(variant=variant, a=a)
            assert np.all(np.diff(b.value(np.linspace(-20, 20, 4001))) >= 0)

    def test_shift_domain(self):
        with pytest.raises(InvalidParameterError):
            composite.BDAAUnit(variant=3, a=-1.0)
        with pytest.raises(InvalidParameterError):
            composite.BDAAUnit(variant=5, a=0.0)


def test_all_instances_pass_gradient_checks():
    for obj in composite.default_instances() + composite.perturbed_instances():
        r = gradients.check_composite(obj)
        assert r.passed, (obj.name, r.max_rel_err, r.worst_target, r.worst_x)


def test_json_round_trip():
    for obj in composite.default_instances():
        clone = composite.from_json(json.loads(json.dumps(obj.to_json())))
        np.testing.assert_allclose(obj.value(XS), clone.value(XS), atol=0)
