"""Minimal dense network: forward/backward with any catalog activation,
MSE/BCE losses, plain gradient-descent and Adam updates, and the metric
telemetry (gradient RMS, weight RMS, losses) recorded during training.
"""

import json
from dataclasses import dataclass, field

import numpy as np

from . import stochastic
from .catalog import registry
from .context import EvalContext, PER_BATCH
from .errors import ActivationError, TrainingDivergedError

DECODER_LINEAR = "linear"
DECODER_SIGMOID = "sigmoid_threshold"

CHECKPOINT_MAGIC = "actlab-net-v1"


@dataclass
class Layer:
    W: np.ndarray                     # (out, in)
    b: np.ndarray                     # (out,)
    kind: str = "identity"
    act_params: dict = field(default_factory=dict)
    train_act: bool = False           # update learnable activation params?

    def __post_init__(self):
        self.W = np.asarray(self.W, dtype=float)
        self.b = np.asarray(self.b, dtype=float)
        self.kind = registry.canonical_name(self.kind)
        info = registry.get(self.kind)
        self.act_params = registry.resolve_params(info, self.act_params)
        self._info = info

    @property
    def info(self):
        return self._info

    def learnable_act_names(self):
        return self._info.learnable_for(self.act_params) if self.train_act else ()


@dataclass
class Network:
    layers: list
    decoder: str = DECODER_LINEAR

    def __post_init__(self):
        if self.decoder not in (DECODER_LINEAR, DECODER_SIGMOID):
            raise ActivationError(f"unknown decoder {self.decoder!r}")
        for a, b in zip(self.layers, self.layers[1:]):
            if b.W.shape[1] != a.W.shape[0]:
                raise ActivationError("adjacent layer widths must match")

    @property
    def widths(self):
        return [self.layers[0].W.shape[1]] + [l.W.shape[0] for l in self.layers]


def init_glorot(widths, seed, activation="tanh", act_params=None,
                decoder=DECODER_LINEAR, train_act=False):
    """Network with W ~ U(+-sqrt(6 / (fan_in + fan_out))), zero biases.

    Hidden layers use `activation`; the output layer is the identity for a
    linear decoder or the logistic for the sigmoid+threshold decoder.
    Deterministic for a fixed seed.
    """
    widths = [int(w) for w in widths]
    if len(widths) < 2:
        raise ActivationError("need at least input and output widths")
    rng = np.random.default_rng(seed)
    layers = []
    last = len(widths) - 2
    for i, (fan_in, fan_out) in enumerate(zip(widths, widths[1:])):
        limit = np.sqrt(6.0 / (fan_in + fan_out))
        W = rng.uniform(-limit, limit, size=(fan_out, fan_in))
        b = np.zeros(fan_out)
        if i < last:
            layers.append(Layer(W, b, activation, dict(act_params or {}), train_act))
        else:
            out_kind = "logistic" if decoder == DECODER_SIGMOID else "identity"
            layers.append(Layer(W, b, out_kind))
    return Network(layers, decoder)


def _layer_effective_params(layer, ctx, zshape):
    """Activation params with stochastic coefficients for one forward pass."""
    p = layer.act_params
    if not layer.info.stochastic:
        return p
    if ctx is not None and ctx.training:
        size = (zshape[1],) if ctx.sample_scope == PER_BATCH else zshape
        draws = stochastic.sample_coefficients(layer.kind, p, ctx.rng, size=size)
        return dict(p, **draws)
    return stochastic.eval_mode_params(layer.kind, p)


def forward(net, X, ctx=None):
    """Outputs plus the cache required by backward.

    Per-batch sample scope draws one stochastic coefficient per unit per
    call; per-call scope draws one per element.
    """
    A = np.asarray(X, dtype=float)
    if A.ndim != 2 or A.shape[1] != net.layers[0].W.shape[1]:
        raise ActivationError("batch feature width must equal the network input width")
    cache = []
    for layer in net.layers:
        Z = A @ layer.W.T + layer.b
        p = _layer_effective_params(layer, ctx, Z.shape)
        out = layer.info.value(Z, p)
        cache.append((A, Z, p))
        A = out
    return A, cache


@dataclass
class Grads:
    dW: list
    db: list
    dact: list    # per layer: {param name: scalar} for trained activation params


def backward(net, cache, dloss_dout):
    """Reverse-mode gradients for every weight, bias, and trained activation
    parameter. `cache` must come from a forward over the same network."""
    if len(cache) != len(net.layers):
        raise ActivationError("stale cache: layer count mismatch")
    G = np.asarray(dloss_dout, dtype=float)
    dW = [None] * len(net.layers)
    db = [None] * len(net.layers)
    dact = [dict() for _ in net.layers]
    for i in range(len(net.layers) - 1, -1, -1):
        layer = net.layers[i]
        A_in, Z, p = cache[i]
        if G.shape != Z.shape:
            raise ActivationError("stale cache: shape mismatch in backward")
        names = layer.learnable_act_names()
        if names:
            dp = layer.info.dparam(Z, p)
            for n in names:
                dact[i][n] = float(np.sum(G * dp[n]))
        dZ = G * layer.info.dx(Z, p)
        dW[i] = dZ.T @ A_in
        db[i] = dZ.sum(axis=0)
        G = dZ @ layer.W
    return Grads(dW, db, dact)


def mse_loss(pred, target):
    """Mean squared error over every element; gradient wrt pred."""
    pred = np.asarray(pred, dtype=float)
    target = np.asarray(target, dtype=float)
    if pred.shape != target.shape:
        raise ActivationError("mse: prediction/target shape mismatch")
    diff = pred - target
    return float(np.mean(diff * diff)), 2.0 * diff / diff.size


def bce_loss(prob, label):
    """Mean binary cross-entropy; probabilities clamped to [1e-12, 1 - 1e-12]."""
    prob = np.asarray(prob, dtype=float)
    label = np.asarray(label, dtype=float)
    if prob.shape != label.shape:
        raise ActivationError("bce: probability/label shape mismatch")
    p = np.clip(prob, 1e-12, 1.0 - 1e-12)
    loss = -np.mean(label * np.log(p) + (1.0 - label) * np.log(1.0 - p))
    grad = (-label / p + (1.0 - label) / (1.0 - p)) / p.size
    return float(loss), grad


def rms(values):
    """Root mean square of a flat collection of values."""
    v = np.asarray(values, dtype=float).ravel()
    if v.size == 0:
        raise ActivationError("rms of an empty collection")
    return float(np.sqrt(np.mean(v * v)))


def _layer_grad_rms(grads, i):
    return rms(np.concatenate([grads.dW[i].ravel(), grads.db[i].ravel()]))


def _layer_weight_rms(layer):
    return rms(np.concatenate([layer.W.ravel(), layer.b.ravel()]))


def sgd_step(net, grads, lr):
    """Plain gradient-descent update: theta <- theta - lr * dtheta."""
    if lr <= 0:
        raise ActivationError("learning rate must be > 0")
    for i, layer in enumerate(net.layers):
        layer.W -= lr * grads.dW[i]
        layer.b -= lr * grads.db[i]
        for n, g in grads.dact[i].items():
            layer.act_params[n] = layer.act_params[n] - lr * g
    return net


@dataclass
class AdamState:
    """First/second moment accumulators, shaped like the parameters."""

    lr: float = 0.01
    beta1: float = 0.9
    beta2: float = 0.999
    eps: float = 1e-8
    step: int = 0
    mW: list = None
    vW: list = None
    mb: list = None
    vb: list = None
    mact: list = None
    vact: list = None

    @classmethod
    def for_net(cls, net, lr=0.01, beta1=0.9, beta2=0.999, eps=1e-8):
        return cls(lr=lr, beta1=beta1, beta2=beta2, eps=eps, step=0,
                   mW=[np.zeros_like(l.W) for l in net.layers],
                   vW=[np.zeros_like(l.W) for l in net.layers],
                   mb=[np.zeros_like(l.b) for l in net.layers],
                   vb=[np.zeros_like(l.b) for l in net.layers],
                   mact=[{n: 0.0 for n in l.learnable_act_names()} for l in net.layers],
                   vact=[{n: 0.0 for n in l.learnable_act_names()} for l in net.layers])


def adam_step(net, grads, state):
    """Bias-corrected Adam update; returns (net, state).

    Degenerate beta1 = beta2 = 0 normalizes each step to lr * g / (|g| + eps),
    which matches plain gradient descent in direction but not magnitude.
    """
    state.step += 1
    b1, b2, t = state.beta1, state.beta2, state.step
    corr1 = 1.0 - b1 ** t
    corr2 = 1.0 - b2 ** t

    def upd(m, v, g):
        m *= b1
        m += (1 - b1) * g
        v *= b2
        v += (1 - b2) * g * g
        return (state.lr * (m / corr1)) / (np.sqrt(v / corr2) + state.eps)

    for i, layer in enumerate(net.layers):
        if grads.dW[i].shape != layer.W.shape:
            raise ActivationError("adam: gradient/parameter shape mismatch")
        layer.W -= upd(state.mW[i], state.vW[i], grads.dW[i])
        layer.b -= upd(state.mb[i], state.vb[i], grads.db[i])
        for n, g in grads.dact[i].items():
            m = state.mact[i][n] = b1 * state.mact[i][n] + (1 - b1) * g
            v = state.vact[i][n] = b2 * state.vact[i][n] + (1 - b2) * g * g
            layer.act_params[n] -= (state.lr * (m / corr1)) / (np.sqrt(v / corr2) + state.eps)
    return net, state


@dataclass
class MetricLog:
    """Telemetry recorded while training.

    Per-batch gradient RMS per layer, the per-round aggregates (mean of the
    round's batch values), weight RMS per round (weights + biases; trained
    activation params are logged separately), the mean training loss per
    round, validation loss, and for classifiers the accuracy and confusion
    counts (tp, fp, fn, tn) per round.
    """

    grad_rms_per_batch: list = field(default_factory=list)   # [batch][layer]
    grad_rms_per_round: list = field(default_factory=list)   # [round][layer]
    weight_rms_per_round: list = field(default_factory=list)  # [round][layer]
    act_param_rms_per_round: list = field(default_factory=list)
    round_loss: list = field(default_factory=list)
    val_loss: list = field(default_factory=list)
    val_accuracy: list = field(default_factory=list)
    confusion: list = field(default_factory=list)

    @property
    def rounds(self):
        return len(self.round_loss)

    def to_dict(self):
        return {
            "grad_rms_per_batch": self.grad_rms_per_batch,
            "grad_rms_per_round": self.grad_rms_per_round,
            "weight_rms_per_round": self.weight_rms_per_round,
            "act_param_rms_per_round": self.act_param_rms_per_round,
            "round_loss": self.round_loss,
            "val_loss": self.val_loss,
            "val_accuracy": self.val_accuracy,
            "confusion": self.confusion,
        }

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True, indent=None,
                          separators=(",", ":"))

    def csv_rows(self):
        """Per-round table; header first."""
        n_layers = len(self.grad_rms_per_round[0]) if self.grad_rms_per_round else 0
        head = ["round", "round_loss", "val_loss"]
        if self.val_accuracy:
            head.append("val_accuracy")
        head += [f"grad_rms_layer{i}" for i in range(n_layers)]
        head += [f"weight_rms_layer{i}" for i in range(n_layers)]
        rows = [head]
        for r in range(self.rounds):
            row = [r + 1, self.round_loss[r], self.val_loss[r]]
            if self.val_accuracy:
                row.append(self.val_accuracy[r])
            row += list(self.grad_rms_per_round[r])
            row += list(self.weight_rms_per_round[r])
            rows.append(row)
        return rows


def _check_finite_net(net, round_index, batch_index):
    for layer in net.layers:
        if not (np.all(np.isfinite(layer.W)) and np.all(np.isfinite(layer.b))):
            raise TrainingDivergedError(round_index, batch_index,
                                        "non-finite parameter after update")


def confusion_counts(prob, label):
    """(tp, fp, fn, tn) under the p > 0.5 decode, positive class = 1."""
    pred = (np.asarray(prob, dtype=float).ravel() > 0.5).astype(int)
    y = np.asarray(label, dtype=float).ravel().astype(int)
    tp = int(np.sum((pred == 1) & (y == 1)))
    fp = int(np.sum((pred == 1) & (y == 0)))
    fn = int(np.sum((pred == 0) & (y == 1)))
    tn = int(np.sum((pred == 0) & (y == 0)))
    return tp, fp, fn, tn


def train(net, X_train, y_train, X_val, y_val, loss="mse", rounds=50,
          batch_size=64, lr=0.01, optimizer="adam", seed=0, classify=False,
          sample_scope=PER_BATCH):
    """Train `net`, recording the full MetricLog.

    Batches are drawn from a seeded per-round shuffle; the last partial batch
    is kept. A non-finite loss or parameter aborts with
    TrainingDivergedError.
    """
    loss_fn = {"mse": mse_loss, "bce": bce_loss}[loss]
    shuffle_rng = np.random.default_rng(np.random.SeedSequence((int(seed), 101)))
    ctx = EvalContext.train(np.random.SeedSequence((int(seed), 202)), sample_scope)
    eval_ctx = EvalContext.eval_mode()
    state = AdamState.for_net(net, lr=lr) if optimizer == "adam" else None
    log = MetricLog()
    n = X_train.shape[0]
    n_layers = len(net.layers)

    for r in range(rounds):
        order = shuffle_rng.permutation(n)
        batch_losses = []
        round_grad_rms = [[] for _ in range(n_layers)]
        for bi, start in enumerate(range(0, n, batch_size)):
            idx = order[start:start + batch_size]
            out, cache = forward(net, X_train[idx], ctx)
            value, dloss = loss_fn(out, y_train[idx])
            if not np.isfinite(value):
                raise TrainingDivergedError(r + 1, bi + 1, "non-finite loss")
            grads = backward(net, cache, dloss)
            per_layer = [_layer_grad_rms(grads, i) for i in range(n_layers)]
            log.grad_rms_per_batch.append(per_layer)
            for i, v in enumerate(per_layer):
                round_grad_rms[i].append(v)
            if optimizer == "adam":
                adam_step(net, grads, state)
            else:
                sgd_step(net, grads, lr)
            _check_finite_net(net, r + 1, bi + 1)
            batch_losses.append(value)
        log.round_loss.append(float(np.mean(batch_losses)))
        log.grad_rms_per_round.append([float(np.mean(v)) for v in round_grad_rms])
        log.weight_rms_per_round.append([_layer_weight_rms(l) for l in net.layers])
        log.act_param_rms_per_round.append(
            [rms([l.act_params[n] for n in l.learnable_act_names()])
             if l.learnable_act_names() else 0.0 for l in net.layers])
        val_out, _ = forward(net, X_val, eval_ctx)
        val_value, _ = loss_fn(val_out, y_val)
        log.val_loss.append(float(val_value))
        if classify:
            tp, fp, fn, tn = confusion_counts(val_out, y_val)
            log.confusion.append([tp, fp, fn, tn])
            log.val_accuracy.append((tp + tn) / max(1, tp + fp + fn + tn))
    return log


# checkpoint format: one JSON header line, then the little-endian f64 blob ---

def _param_order(net):
    for i, layer in enumerate(net.layers):
        yield ("W", i, layer.W)
        yield ("b", i, layer.b)
        for n in sorted(layer.info.learnable_for(layer.act_params)):
            yield ("act", (i, n), np.asarray([layer.act_params[n]], dtype=float))


def save_checkpoint(net, path):
    header = {
        "format": CHECKPOINT_MAGIC,
        "widths": net.widths,
        "decoder": net.decoder,
        "layers": [{"kind": l.kind,
                    "act_params": {k: float(v) for k, v in l.act_params.items()},
                    "train_act": l.train_act} for l in net.layers],
    }
    blob = np.concatenate([arr.ravel() for _, _, arr in _param_order(net)])
    with open(path, "wb") as fh:
        fh.write((json.dumps(header, sort_keys=True) + "\n").encode("utf-8"))
        fh.write(blob.astype("<f8").tobytes())


def load_checkpoint(path):
    with open(path, "rb") as fh:
        header = json.loads(fh.readline().decode("utf-8"))
        blob = np.frombuffer(fh.read(), dtype="<f8")
    if header.get("format") != CHECKPOINT_MAGIC:
        raise ActivationError("not an actlab checkpoint")
    widths = header["widths"]
    layers = []
    for spec, fan_in, fan_out in zip(header["layers"], widths, widths[1:]):
        layers.append(Layer(np.zeros((fan_out, fan_in)), np.zeros(fan_out),
                            spec["kind"], spec["act_params"], spec["train_act"]))
    net = Network(layers, header["decoder"])
    pos = 0
    for tag, key, arr in _param_order(net):
        chunk = blob[pos:pos + arr.size]
        pos += arr.size
        if tag == "W":
            net.layers[key].W = chunk.reshape(net.layers[key].W.shape).copy()
        elif tag == "b":
            net.layers[key].b = chunk.copy()
        else:
            i, n = key
            net.layers[i].act_params[n] = float(chunk[0])
    if pos != blob.size:
        raise ActivationError("checkpoint blob size mismatch")
    return net
