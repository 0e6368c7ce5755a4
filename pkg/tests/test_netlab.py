import numpy as np
import pytest

from actlab import netlab
from actlab.context import EvalContext
from actlab.errors import ActivationError, TrainingDivergedError


def _flatten(net):
    return np.concatenate([arr.ravel().copy()
                           for _, _, arr in netlab._param_order(net)])


def _set_flat(net, theta):
    pos = 0
    for tag, key, arr in netlab._param_order(net):
        chunk = theta[pos:pos + arr.size]
        pos += arr.size
        if tag == "W":
            net.layers[key].W[...] = chunk.reshape(net.layers[key].W.shape)
        elif tag == "b":
            net.layers[key].b[...] = chunk
        else:
            i, n = key
            net.layers[i].act_params[n] = float(chunk[0])


def _grads_flat(net, g):
    parts = []
    for i, layer in enumerate(net.layers):
        parts.append(g.dW[i].ravel())
        parts.append(g.db[i].ravel())
        for n in sorted(layer.info.learnable_for(layer.act_params)):
            parts.append(np.array([g.dact[i].get(n, 0.0)]))
    return np.concatenate(parts)


class TestInit:
    def test_deterministic(self):
        a = netlab.init_glorot([2, 5, 5, 1], seed=3)
        b = netlab.init_glorot([2, 5, 5, 1], seed=3)
        for la, lb in zip(a.layers, b.layers):
            np.testing.assert_array_equal(la.W, lb.W)
            np.testing.assert_array_equal(la.b, lb.b)

    def test_shapes(self):
        net = netlab.init_glorot([2, 5, 5, 1], seed=0)
        assert [l.W.shape for l in net.layers] == [(5, 2), (5, 5), (1, 5)]
        assert net.widths == [2, 5, 5, 1]

    def test_variance_matches_glorot(self):
        net = netlab.init_glorot([100, 100, 1], seed=1)
        W = net.layers[0].W
        assert W.size == 10_000
        want = 2.0 / (100 + 100)
        assert np.var(W) == pytest.approx(want, rel=0.10)
        assert np.all(net.layers[0].b == 0.0)

    def test_width_floor(self):
        with pytest.raises(ActivationError):
            netlab.init_glorot([4], seed=0)


class TestForward:
    def test_identity_layer_passthrough(self):
        layer = netlab.Layer(np.eye(3), np.zeros(3), "identity")
        net = netlab.Network([layer])
        X = np.arange(12.0).reshape(4, 3)
        out, _ = netlab.forward(net, X)
        np.testing.assert_array_equal(out, X)

    def test_relu_blocks_negative_preactivations(self):
        layer = netlab.Layer(-np.ones((4, 2)), np.zeros(4), "relu")
        net = netlab.Network([layer])
        out, _ = netlab.forward(net, np.abs(np.random.default_rng(0).normal(size=(6, 2))))
        np.testing.assert_array_equal(out, 0.0)

    def test_eval_mode_forward_is_repeatable(self):
        net = netlab.init_glorot([2, 8, 1], seed=9, activation="rrelu")
        X = np.random.default_rng(1).normal(size=(5, 2))
        ctx = EvalContext.eval_mode()
        first, _ = netlab.forward(net, X, ctx)
        for _ in range(3):
            again, _ = netlab.forward(net, X, ctx)
            np.testing.assert_array_equal(first, again)

    def test_shape_mismatch(self):
        net = netlab.init_glorot([2, 3, 1], seed=0)
        with pytest.raises(ActivationError):
            netlab.forward(net, np.zeros((4, 3)))

    def test_train_mode_stochastic_outputs_vary(self):
        net = netlab.init_glorot([2, 8, 1], seed=9, activation="rrelu")
        X = -np.abs(np.random.default_rng(1).normal(size=(5, 2)))
        ctx = EvalContext.train(7)
        a, _ = netlab.forward(net, X, ctx)
        b, _ = netlab.forward(net, X, ctx)
        assert not np.array_equal(a, b)


class TestBackward:
    def test_zero_upstream_gives_zero_grads(self):
        net = netlab.init_glorot([2, 4, 1], seed=2)
        X = np.random.default_rng(0).normal(size=(3, 2))
        out, cache = netlab.forward(net, X)
        g = netlab.backward(net, cache, np.zeros_like(out))
        assert all(np.all(dw == 0) for dw in g.dW)
        assert all(np.all(db == 0) for db in g.db)

    @pytest.mark.parametrize("kind", ["relu", "tanh", "gelu_erf", "swish",
                                      "prelu", "s_shaped_relu"])
    def test_whole_network_fd(self, kind):
        rng = np.random.default_rng(3)
        X = rng.normal(size=(7, 2))
        Y = rng.normal(size=(7, 1))
        net = netlab.init_glorot([2, 10, 10, 10, 1], seed=5, activation=kind,
                                 train_act=True)
        out, cache = netlab.forward(net, X)
        _, dl = netlab.mse_loss(out, Y)
        ga = _grads_flat(net, netlab.backward(net, cache, dl))
        theta0 = _flatten(net)
        h = 1e-6
        fd = np.zeros_like(theta0)
        for j in range(theta0.size):
            for sgn in (1.0, -1.0):
                t = theta0.copy()
                t[j] += sgn * h
                _set_flat(net, t)
                l, _ = netlab.mse_loss(netlab.forward(net, X)[0], Y)
                fd[j] += sgn * l
        fd /= 2 * h
        _set_flat(net, theta0)
        rel = np.abs(ga - fd) / np.maximum(1.0, np.maximum(np.abs(ga), np.abs(fd)))
        assert rel.max() < 1e-4

    def test_small_tanh_net_fd(self):
        rng = np.random.default_rng(4)
        X = rng.normal(size=(5, 2))
        Y = rng.normal(size=(5, 1))
        net = netlab.init_glorot([2, 2, 1], seed=1, activation="tanh")
        out, cache = netlab.forward(net, X)
        _, dl = netlab.mse_loss(out, Y)
        ga = _grads_flat(net, netlab.backward(net, cache, dl))
        theta0 = _flatten(net)
        fd = np.zeros_like(theta0)
        h = 1e-6
        for j in range(theta0.size):
            tp = theta0.copy()
            tp[j] += h
            _set_flat(net, tp)
            lp, _ = netlab.mse_loss(netlab.forward(net, X)[0], Y)
            tm = theta0.copy()
            tm[j] -= h
            _set_flat(net, tm)
            lm, _ = netlab.mse_loss(netlab.forward(net, X)[0], Y)
            fd[j] = (lp - lm) / (2 * h)
        _set_flat(net, theta0)
        assert np.max(np.abs(ga - fd)) < 1e-5

    def test_prelu_slope_grad_accumulates_over_batch(self):
        layer = netlab.Layer(np.eye(2), np.zeros(2), "prelu", {"alpha": 0.3},
                             train_act=True)
        net = netlab.Network([layer])
        X = np.array([[-1.0, 2.0], [-3.0, -0.5], [4.0, -2.0]])
        out, cache = netlab.forward(net, X)
        upstream = np.ones_like(out)
        g = netlab.backward(net, cache, upstream)
        want = np.sum(np.where(X < 0, X, 0.0))
        assert g.dact[0]["alpha"] == pytest.approx(want)

    def test_stale_cache_detected(self):
        net = netlab.init_glorot([2, 3, 1], seed=0)
        _, cache = netlab.forward(net, np.zeros((4, 2)))
        with pytest.raises(ActivationError):
            netlab.backward(net, cache[:1], np.zeros((4, 1)))


class TestLosses:
    def test_mse_perfect(self):
        loss, grad = netlab.mse_loss(np.array([[1.0]]), np.array([[1.0]]))
        assert loss == 0.0 and np.all(grad == 0.0)

    def test_bce_even_odds(self):
        loss, _ = netlab.bce_loss(np.array([[0.5]]), np.array([[1.0]]))
        assert loss == pytest.approx(np.log(2.0))

    def test_bce_clamps(self):
        loss, grad = netlab.bce_loss(np.array([[0.0]]), np.array([[1.0]]))
        assert np.isfinite(loss) and np.all(np.isfinite(grad))

    @pytest.mark.parametrize("loss_fn,point", [(netlab.mse_loss, 0.3),
                                               (netlab.bce_loss, 0.3)])
    def test_grad_matches_fd(self, loss_fn, point):
        rng = np.random.default_rng(0)
        pred = np.full((4, 2), point) + 0.1 * rng.random((4, 2))
        target = (rng.random((4, 2)) > 0.5).astype(float)
        _, grad = loss_fn(pred, target)
        h = 1e-7
        for i in range(4):
            for j in range(2):
                p = pred.copy()
                p[i, j] += h
                lp, _ = loss_fn(p, target)
                p[i, j] -= 2 * h
                lm, _ = loss_fn(p, target)
                assert (lp - lm) / (2 * h) == pytest.approx(grad[i, j], abs=1e-6)

    def test_shape_mismatch(self):
        with pytest.raises(ActivationError):
            netlab.mse_loss(np.zeros((2, 1)), np.zeros((3, 1)))


class TestOptimizers:
    def _toy(self):
        net = netlab.init_glorot([2, 3, 1], seed=6)
        zeros = netlab.Grads([np.zeros_like(l.W) for l in net.layers],
                             [np.zeros_like(l.b) for l in net.layers],
                             [dict() for _ in net.layers])
        return net, zeros

    def test_sgd_zero_grads_no_change(self):
        net, zeros = self._toy()
        before = _flatten(net)
        netlab.sgd_step(net, zeros, 0.1)
        np.testing.assert_array_equal(before, _flatten(net))

    def test_sgd_unit_rate_cancels(self):
        net, _ = self._toy()
        grads = netlab.Grads([l.W.copy() for l in net.layers],
                             [l.b.copy() for l in net.layers],
                             [dict() for _ in net.layers])
        netlab.sgd_step(net, grads, 1.0)
        assert all(np.all(l.W == 0) for l in net.layers)

    def test_adam_zero_grads_no_change(self):
        net, zeros = self._toy()
        state = netlab.AdamState.for_net(net, lr=0.1)
        before = _flatten(net)
        netlab.adam_step(net, zeros, state)
        np.testing.assert_array_equal(before, _flatten(net))

    def test_adam_constant_gradient_step_approaches_lr(self):
        # with a constant gradient the bias-corrected update tends to lr
        net, _ = self._toy()
        state = netlab.AdamState.for_net(net, lr=0.01)
        g = netlab.Grads([np.full_like(l.W, 0.37) for l in net.layers],
                         [np.full_like(l.b, 0.37) for l in net.layers],
                         [dict() for _ in net.layers])
        w_prev = net.layers[0].W.copy()
        for _ in range(300):
            w_prev = net.layers[0].W.copy()
            netlab.adam_step(net, g, state)
        step = np.abs(net.layers[0].W - w_prev)
        np.testing.assert_allclose(step, 0.01, rtol=1e-4)

    def test_adam_trajectories_are_bit_identical(self):
        def run():
            rng = np.random.default_rng(0)
            X = rng.normal(size=(32, 2))
            y = rng.normal(size=(32, 1))
            net = netlab.init_glorot([2, 6, 1], seed=1)
            netlab.train(net, X, y, X, y, rounds=5, batch_size=8, seed=3)
            return _flatten(net)

        np.testing.assert_array_equal(run(), run())


class TestRms:
    def test_three_four(self):
        assert netlab.rms([3.0, 4.0]) == pytest.approx(3.5355, abs=1e-4)

    def test_constant(self):
        assert netlab.rms([-2.5] * 7) == 2.5

    def test_matches_two_pass(self):
        v = np.random.default_rng(0).normal(size=1_000_000)
        naive = np.sqrt(np.sum(v * v) / v.size)
        assert netlab.rms(v) == pytest.approx(naive, abs=1e-12)

    def test_empty(self):
        with pytest.raises(ActivationError):
            netlab.rms([])


class TestTraining:
    def _data(self, seed=0):
        rng = np.random.default_rng(seed)
        X = rng.uniform(-2, 2, size=(200, 1))
        y = np.exp(-X ** 2) + rng.normal(0, 0.1, size=X.shape)
        return X, y

    def test_metric_log_shapes(self):
        X, y = self._data()
        net = netlab.init_glorot([1, 6, 1], seed=2)
        log = netlab.train(net, X[:160], y[:160], X[160:], y[160:],
                           rounds=4, batch_size=64, seed=1)
        assert log.rounds == 4
        assert len(log.grad_rms_per_round) == 4
        # 160 samples in 64-batches: 3 batches per round, partial kept
        assert len(log.grad_rms_per_batch) == 12
        assert all(len(r) == 2 for r in log.grad_rms_per_round)

    def test_loss_decreases_over_training(self):
        for seed in range(10):
            X, y = self._data(seed)
            net = netlab.init_glorot([1, 8, 1], seed=seed, activation="tanh")
            log = netlab.train(net, X[:160], y[:160], X[160:], y[160:],
                               rounds=25, batch_size=64, seed=seed)
            assert log.round_loss[-1] < log.round_loss[0]

    def test_divergence_aborts_with_location(self):
        X, y = self._data()
        net = netlab.init_glorot([1, 6, 1], seed=2)
        with pytest.raises(TrainingDivergedError) as err, np.errstate(all="ignore"):
            netlab.train(net, X, y, X, y, rounds=4, batch_size=64,
                         optimizer="sgd", lr=1e150, seed=0)
        assert err.value.round_index >= 1 and err.value.batch_index >= 1


def test_checkpoint_round_trip(tmp_path):
    net = netlab.init_glorot([2, 7, 3, 1], seed=8, activation="prelu",
                             act_params={"alpha": 0.33}, train_act=True)
    path = tmp_path / "net.ckpt"
    netlab.save_checkpoint(net, path)
    clone = netlab.load_checkpoint(path)
    assert clone.widths == net.widths and clone.decoder == net.decoder
    for a, b in zip(net.layers, clone.layers):
        np.testing.assert_array_equal(a.W, b.W)
        np.testing.assert_array_equal(a.b, b.b)
        assert a.kind == b.kind and a.act_params == b.act_params
    X = np.random.default_rng(0).normal(size=(9, 2))
    np.testing.assert_array_equal(netlab.forward(net, X)[0],
                                  netlab.forward(clone, X)[0])
