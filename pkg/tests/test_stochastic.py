import numpy as np
import pytest

from actlab import catalog, stochastic
from actlab.context import EvalContext, derive_stream
from actlab.errors import InvalidParameterError, NotStochasticError


class _ScriptedRng:
    """Stand-in generator returning scripted draws, for clamp tests."""

    def __init__(self, uniform=0.5, normal=1.0):
        self._uniform = uniform
        self._normal = normal

    def uniform(self, lo, hi, size=None):
        return lo + (hi - lo) * self._uniform

    def normal(self, mean, std, size=None):
        return self._normal


class TestRReluSlope:
    def test_support(self):
        rng = np.random.default_rng(7)
        r = stochastic.sample_rrelu_slope(0.1, 0.3, rng)
        assert 0.1 <= r < 0.3

    def test_bound_order_rejected(self):
        rng = np.random.default_rng(0)
        with pytest.raises(InvalidParameterError):
            stochastic.sample_rrelu_slope(0.3, 0.3, rng)
        with pytest.raises(InvalidParameterError):
            stochastic.sample_rrelu_slope(0.2, 1.0, rng)

    def test_monte_carlo_mean(self):
        rng = np.random.default_rng(123)
        draws = stochastic.sample_rrelu_slope(0.1, 0.3, rng, size=100_000)
        assert np.mean(draws) == pytest.approx(0.2, abs=0.002)


class TestEeluSlope:
    def test_clamps_high(self):
        k = stochastic.sample_eelu_k(0.5, _ScriptedRng(normal=2.5))
        assert k == 2.0

    def test_clamps_low(self):
        k = stochastic.sample_eelu_k(0.5, _ScriptedRng(normal=-0.3))
        assert k == 0.0

    def test_passes_through(self):
        k = stochastic.sample_eelu_k(0.5, _ScriptedRng(normal=1.2))
        assert k == 1.2

    def test_eps_domain(self):
        with pytest.raises(InvalidParameterError):
            stochastic.sample_eelu_k(0.0, np.random.default_rng(0))
        with pytest.raises(InvalidParameterError):
            stochastic.sample_eelu_k(1.5, np.random.default_rng(0))


class TestEvalModeParams:
    def test_erelu_becomes_relu(self):
        p = stochastic.eval_mode_params("erelu", catalog.default_params("erelu"))
        assert p["r"] == 1.0
        xs = np.linspace(-4, 4, 101)
        assert np.array_equal(catalog.evaluate("erelu", xs),
                              catalog.evaluate("relu", xs))

    def test_rtrelu_offset_zero(self):
        p = stochastic.eval_mode_params("rtrelu", catalog.default_params("rtrelu"))
        assert p["a"] == 0.0

    def test_rrelu_mean_slope(self):
        p = stochastic.eval_mode_params("rrelu", {"l": 0.1, "u": 0.3, "r": 0.9})
        assert p["r"] == pytest.approx(0.2)

    def test_eelu_expectation_is_one(self):
        p = stochastic.eval_mode_params("eelu", catalog.default_params("eelu"))
        assert p["k"] == 1.0

    def test_non_stochastic_rejected(self):
        with pytest.raises(NotStochasticError):
            stochastic.eval_mode_params("relu", {})
        with pytest.raises(NotStochasticError):
            stochastic.sample_coefficients("tanh", {}, np.random.default_rng(0))


class TestNegProb:
    # printed percentages for P(N(1, sigma) < 0)
    TABLE = {0.1: 0.0000, 0.2: 0.0000, 0.3: 0.0004, 0.4: 0.0062, 0.5: 0.0228,
             0.6: 0.0478, 0.7: 0.0766, 0.8: 0.1056, 0.9: 0.1333, 1.0: 0.1587}

    def test_published_rows(self):
        for sigma, prob in self.TABLE.items():
            assert stochastic.neg_prob(sigma) == pytest.approx(prob, abs=5e-5)

    def test_monte_carlo_agreement(self):
        rng = np.random.default_rng(99)
        for sigma in (0.3, 0.5, 0.7, 1.0):
            draws = rng.normal(1.0, sigma, size=1_000_000)
            mc = np.mean(draws < 0.0)
            assert mc == pytest.approx(stochastic.neg_prob(sigma), abs=3e-3)

    def test_domain(self):
        with pytest.raises(InvalidParameterError):
            stochastic.neg_prob(0.0)


class TestDeterminism:
    def test_same_seed_same_stream(self):
        a = EvalContext.train(42)
        b = EvalContext.train(42)
        for _ in range(100):
            da = stochastic.sample_coefficients("rrelu", catalog.default_params("rrelu"),
                                                a.rng, size=100)
            db = stochastic.sample_coefficients("rrelu", catalog.default_params("rrelu"),
                                                b.rng, size=100)
            assert np.array_equal(da["r"], db["r"])

    def test_derived_streams_differ(self):
        s0 = derive_stream(7, 0).random(16)
        s1 = derive_stream(7, 1).random(16)
        assert not np.array_equal(s0, s1)
        assert np.array_equal(s0, derive_stream(7, 0).random(16))

    def test_eval_mode_is_pure(self):
        for kind in ("rrelu", "rtrelu", "rtprelu", "erelu", "eprelu", "eelu"):
            first = catalog.evaluate(kind, -1.3)
            for _ in range(5):
                assert catalog.evaluate(kind, -1.3) == first

    def test_train_mode_varies_with_stream(self):
        ctx = EvalContext.train(0)
        vals = {catalog.evaluate("rrelu", -2.0, ctx=ctx) for _ in range(20)}
        assert len(vals) > 1


def test_erelu_train_output_bounds():
    ctx = EvalContext.train(5)
    alpha = 0.5
    for _ in range(200):
        v = catalog.evaluate("erelu", 2.0, {"alpha": alpha}, ctx)
        assert (1 - alpha) * 2.0 <= v <= (1 + alpha) * 2.0


def test_context_validation():
    with pytest.raises(ValueError):
        EvalContext("predict")
    with pytest.raises(ValueError):
        EvalContext("train")            # train mode without a generator
    with pytest.raises(ValueError):
        EvalContext("eval", sample_scope="sometimes")
