"""Vector-input activations: softmax with its full Jacobian, maxout units
with winner-routed gradients, and the binary threshold decoder."""

from dataclasses import dataclass

import numpy as np

from .errors import ActivationError, NonFiniteInputError


def _check_logits(z):
    z = np.asarray(z, dtype=float)
    if z.ndim != 1 or z.size < 1:
        raise ActivationError("softmax expects a nonempty 1-d logit vector")
    if not np.all(np.isfinite(z)):
        raise NonFiniteInputError("logits must be finite")
    return z


def softmax(z):
    """Probability vector e^{z_i} / sum_j e^{z_j}, computed max-shifted.

    The shift changes nothing mathematically (the map is invariant under
    adding a constant to every logit) but avoids overflow.
    """
    z = _check_logits(z)
    e = np.exp(z - z.max())
    return e / e.sum()


def softmax_jacobian(z):
    """J[i, j] = d a_j / d z_i = a_j * (delta_ij - a_i); symmetric, rows sum to 0."""
    a = softmax(z)
    return np.diag(a) - np.outer(a, a)


@dataclass(frozen=True)
class MaxoutUnit:
    """k linear pieces w_j . x + b_j; the unit outputs their maximum."""

    W: np.ndarray   # (k, d)
    b: np.ndarray   # (k,)

    def __post_init__(self):
        W = np.atleast_2d(np.asarray(self.W, dtype=float))
        b = np.asarray(self.b, dtype=float).ravel()
        if W.shape[0] != b.shape[0]:
            raise ActivationError("maxout: one bias per piece required")
        if W.shape[0] < 2:
            raise ActivationError("maxout: at least two pieces required")
        object.__setattr__(self, "W", W)
        object.__setattr__(self, "b", b)

    @property
    def k(self):
        return self.W.shape[0]


def maxout(x, unit):
    """(max_j w_j . x + b_j, winning index); ties go to the lowest index."""
    x = np.asarray(x, dtype=float).ravel()
    if x.shape[0] != unit.W.shape[1]:
        raise ActivationError(
            f"maxout: input width {x.shape[0]} != piece width {unit.W.shape[1]}")
    z = unit.W @ x + unit.b
    j = int(np.argmax(z))   # argmax returns the first maximizer
    return float(z[j]), j


def maxout_grad(x, unit):
    """Gradients routed to the winning piece only.

    Returns (dW, db, dx): dW is zero except the winner's row (= x), db is the
    winner's one-hot, dx is the winner's weight vector.
    """
    x = np.asarray(x, dtype=float).ravel()
    _, j = maxout(x, unit)
    dW = np.zeros_like(unit.W)
    dW[j] = x
    db = np.zeros_like(unit.b)
    db[j] = 1.0
    return dW, db, unit.W[j].copy()


def threshold_decode(p):
    """Binary decode of a probability: 1 iff p > 0.5."""
    p = float(p)
    if not 0.0 <= p <= 1.0:
        raise ActivationError("threshold_decode expects a probability in [0, 1]")
    return 1 if p > 0.5 else 0
