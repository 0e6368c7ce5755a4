"""Sampling semantics for the stochastic activations.

Train mode draws per-unit coefficients (negative slopes, input offsets,
positive-slope multipliers); eval mode substitutes the deterministic
expectation of each draw so that evaluation becomes a pure function.
"""

import numpy as np

from .catalog import registry
from .catalog._math import gauss_cdf
from .context import EvalContext, derive_stream  # noqa: F401 (re-export)
from .errors import InvalidParameterError, NotStochasticError


def sample_rrelu_slope(l, u, rng, size=None):
    """Negative slope r ~ U(l, u) with 0 <= l < u < 1."""
    if not (0 <= l < u < 1):
        raise InvalidParameterError("rrelu: slope bounds must satisfy 0 <= l < u < 1")
    return rng.uniform(l, u, size=size)


def sample_eelu_k(eps, rng, size=None):
    """Positive slope k = clip(s, 0, 2) with s ~ N(1, sigma), sigma ~ U(0, eps)."""
    if not (0 < eps <= 1):
        raise InvalidParameterError("eelu: spread bound eps must lie in (0, 1]")
    sigma = rng.uniform(0.0, eps)
    s = rng.normal(1.0, sigma, size=size)
    return np.clip(s, 0.0, 2.0)


def sample_coefficients(kind, params, rng, size=None):
    """Fresh stochastic coefficients for `kind` given its hyperparameters.

    `size=None` draws scalars (scalar evaluation); the network harness passes
    the unit count to draw one coefficient per unit.
    """
    name = registry.canonical_name(kind)
    if name == "rrelu":
        return {"r": sample_rrelu_slope(params["l"], params["u"], rng, size)}
    if name in ("rtrelu", "rtprelu"):
        return {"a": rng.normal(0.0, params["sigma"], size=size)}
    if name in ("erelu", "eprelu"):
        alpha = params["alpha"]
        return {"r": rng.uniform(1.0 - alpha, 1.0 + alpha, size=size)}
    if name == "eelu":
        return {"k": sample_eelu_k(params["eps"], rng, size)}
    raise NotStochasticError(f"{name} has no stochastic coefficients")


def eval_mode_params(kind, params):
    """Deterministic substitution used at test time.

    The negative slope becomes the mean of its uniform range, input offsets
    drop to their zero mean, and positive-slope multipliers become the
    expectation of their (symmetrically clamped) draws, which is exactly 1.
    """
    name = registry.canonical_name(kind)
    info = registry.get(name)
    if not info.stochastic:
        raise NotStochasticError(f"{name} is not a stochastic kind")
    p = dict(params)
    if name == "rrelu":
        p["r"] = (p["l"] + p["u"]) / 2.0
    elif name in ("rtrelu", "rtprelu"):
        p["a"] = 0.0
    elif name in ("erelu", "eprelu"):
        p["r"] = 1.0
    elif name == "eelu":
        p["k"] = 1.0
    return p


def neg_prob(sigma):
    """P(N(1, sigma) < 0), the chance a raw slope draw lands negative."""
    if sigma <= 0:
        raise InvalidParameterError("neg_prob: sigma must be > 0")
    return float(gauss_cdf(-1.0 / sigma))
