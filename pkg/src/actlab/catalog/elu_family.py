"""Exponential-saturating kinds: ELU and its scaled/parametric/elastic variants."""

import math

import numpy as np

from ._math import sigmoid, sigmoid_prime
from .registry import (FAMILY_ADAPTIVE, FAMILY_FIXED, FAMILY_PARAMETRIC,
                       FAMILY_STOCHASTIC, GROUP_ELU, INF, Kind, ParamSpec,
                       Range, register, require)

SELU_LAMBDA = 1.0507
SELU_ALPHA = 1.67326


def _xneg(x):
    return np.minimum(x, 0.0)


def _elu(x, p):
    return np.where(x > 0, x, p["alpha"] * np.expm1(_xneg(x)))


def _elu_dx(x, p):
    return np.where(x > 0, 1.0, p["alpha"] * np.exp(_xneg(x)))


register(Kind(
    name="elu", group=GROUP_ELU, family=FAMILY_ADAPTIVE,
    params={"alpha": ParamSpec(1.0, learnable=True)},
    value=_elu, dx=_elu_dx,
    dparam=lambda x, p: {"alpha": np.where(x > 0, 0.0, np.expm1(_xneg(x)))},
    kinks=lambda p: () if p["alpha"] == 1.0 else (0.0,),
    range_fn=lambda p: Range(-p["alpha"], INF, False, False),
    limits=lambda p: (-p["alpha"], None),
    monotonic=True,
    validate=lambda p: require(p["alpha"] > 0, "elu: saturation depth alpha must be > 0"),
))


def _selu(x, p):
    lam, alpha = p["lambda"], p["alpha"]
    return lam * np.where(x > 0, x, alpha * np.expm1(_xneg(x)))


register(Kind(
    name="selu", group=GROUP_ELU, family=FAMILY_PARAMETRIC,
    params={"lambda": ParamSpec(SELU_LAMBDA), "alpha": ParamSpec(SELU_ALPHA)},
    value=_selu,
    dx=lambda x, p: p["lambda"] * np.where(x > 0, 1.0, p["alpha"] * np.exp(_xneg(x))),
    kinks=lambda p: () if p["alpha"] == 1.0 else (0.0,),
    range_fn=lambda p: Range(-p["lambda"] * p["alpha"], INF, False, False),
    limits=lambda p: (-p["lambda"] * p["alpha"], None),
    monotonic=True,
    validate=lambda p: (require(p["lambda"] > 0, "selu: scale lambda must be > 0"),
                        require(p["alpha"] > 0, "selu: saturation depth alpha must be > 0")),
))


def _pelu(x, p):
    a, b = p["a"], p["b"]
    return np.where(x >= 0, (a / b) * x, a * np.expm1(_xneg(x) / b))


def _pelu_dx(x, p):
    a, b = p["a"], p["b"]
    return np.where(x >= 0, a / b, (a / b) * np.exp(_xneg(x) / b))


def _pelu_dparam(x, p):
    a, b = p["a"], p["b"]
    e = np.exp(_xneg(x) / b)
    pos = x >= 0
    return {"a": np.where(pos, x / b, e - 1.0),
            "b": np.where(pos, -(a / b**2) * x, -(a * x / b**2) * e)}


register(Kind(
    # a/b positive slope keeps the two halves differentiable at the origin
    name="pelu", group=GROUP_ELU, family=FAMILY_ADAPTIVE,
    params={"a": ParamSpec(1.0, learnable=True), "b": ParamSpec(1.0, learnable=True)},
    value=_pelu, dx=_pelu_dx, dparam=_pelu_dparam,
    range_fn=lambda p: Range(-p["a"], INF, False, False),
    limits=lambda p: (-p["a"], None),
    monotonic=True,
    validate=lambda p: require((p["a"] > 0) & (p["b"] > 0), "pelu: a and b must be > 0"),
))


def _celu(x, p):
    alpha = p["alpha"]
    return np.where(x >= 0, x, alpha * np.expm1(_xneg(x) / alpha))


def _celu_dparam(x, p):
    alpha = p["alpha"]
    e = np.exp(_xneg(x) / alpha)
    return {"alpha": np.where(x >= 0, 0.0, e * (1.0 - x / alpha) - 1.0)}


register(Kind(
    name="celu", group=GROUP_ELU, family=FAMILY_ADAPTIVE,
    params={"alpha": ParamSpec(1.0, learnable=True)},
    value=_celu,
    dx=lambda x, p: np.where(x >= 0, 1.0, np.exp(_xneg(x) / p["alpha"])),
    dparam=_celu_dparam,
    range_fn=lambda p: Range(-p["alpha"], INF, False, False),
    limits=lambda p: (-p["alpha"], None),
    monotonic=True,
    validate=lambda p: require(p["alpha"] > 0, "celu: alpha must be > 0"),
))


def _mpelu(x, p):
    alpha, beta = p["alpha"], p["beta"]
    return np.where(x > 0, x, alpha * np.expm1(beta * _xneg(x)))


def _mpelu_dx(x, p):
    alpha, beta = p["alpha"], p["beta"]
    return np.where(x > 0, 1.0, alpha * beta * np.exp(beta * _xneg(x)))


def _mpelu_dparam(x, p):
    alpha, beta = p["alpha"], p["beta"]
    e = np.exp(beta * _xneg(x))
    neg = x <= 0
    return {"alpha": np.where(neg, e - 1.0, 0.0),
            "beta": np.where(neg, x * alpha * e, 0.0)}


def _mpelu_range(p):
    if p["alpha"] == 0:
        return Range(0.0, INF, True, False)
    return Range(-p["alpha"], INF, False, False)


register(Kind(
    name="mpelu", group=GROUP_ELU, family=FAMILY_ADAPTIVE,
    params={"alpha": ParamSpec(1.0, learnable=True), "beta": ParamSpec(1.0, learnable=True)},
    value=_mpelu, dx=_mpelu_dx, dparam=_mpelu_dparam,
    kinks=lambda p: () if p["alpha"] * p["beta"] == 1.0 else (0.0,),
    range_fn=_mpelu_range,
    limits=lambda p: (-p["alpha"], None),
    monotonic=True,
    validate=lambda p: (require(p["alpha"] >= 0, "mpelu: alpha must be >= 0"),
                        require(p["beta"] > 0, "mpelu: beta must be > 0")),
))


register(Kind(
    name="reu", group=GROUP_ELU, family=FAMILY_FIXED, params={},
    value=lambda x, p: np.where(x > 0, x, x * np.exp(_xneg(x))),
    dx=lambda x, p: np.where(x > 0, 1.0, (1.0 + x) * np.exp(_xneg(x))),
    range_fn=lambda p: Range(-math.exp(-1.0), INF, True, False),
    limits=lambda p: (0.0, None),
))


def _preu(x, p):
    alpha, beta = p["alpha"], p["beta"]
    return np.where(x > 0, alpha * x, alpha * x * np.exp(beta * _xneg(x)))


def _preu_dx(x, p):
    alpha, beta = p["alpha"], p["beta"]
    return np.where(x > 0, alpha + 0.0 * x, alpha * (1.0 + beta * x) * np.exp(beta * _xneg(x)))


def _preu_dparam(x, p):
    alpha, beta = p["alpha"], p["beta"]
    e = np.exp(beta * _xneg(x))
    pos = x > 0
    return {"alpha": np.where(pos, x, x * e),
            "beta": np.where(pos, 0.0, alpha * x * x * e)}


register(Kind(
    name="preu", group=GROUP_ELU, family=FAMILY_ADAPTIVE,
    params={"alpha": ParamSpec(1.0, learnable=True), "beta": ParamSpec(1.0, learnable=True)},
    value=_preu, dx=_preu_dx, dparam=_preu_dparam,
    range_fn=lambda p: Range(-p["alpha"] / (p["beta"] * math.e), INF, True, False),
    limits=lambda p: (0.0, None),
    validate=lambda p: require((p["alpha"] > 0) & (p["beta"] > 0),
                               "preu: alpha and beta must be > 0"),
))


LOG2 = math.log(2.0)


def _felu(x, p):
    # 2^{x/ln 2} realizes e^x through the cheaper base-2 exponential
    return np.where(x > 0, x, p["alpha"] * (np.exp2(_xneg(x) / LOG2) - 1.0))


def _felu_dx(x, p):
    return np.where(x > 0, 1.0, p["alpha"] * np.exp2(_xneg(x) / LOG2))


register(Kind(
    name="felu", group=GROUP_ELU, family=FAMILY_ADAPTIVE,
    params={"alpha": ParamSpec(1.0, learnable=True)},
    value=_felu, dx=_felu_dx,
    dparam=lambda x, p: {"alpha": np.where(x > 0, 0.0, np.exp2(_xneg(x) / LOG2) - 1.0)},
    kinks=lambda p: () if p["alpha"] == 1.0 else (0.0,),
    range_fn=lambda p: Range(-p["alpha"], INF, False, False),
    limits=lambda p: (-p["alpha"], None),
    monotonic=True,
    validate=lambda p: require(p["alpha"] > 0, "felu: alpha must be > 0"),
))


def _eelu(x, p):
    alpha, beta, k = p["alpha"], p["beta"], p["k"]
    return np.where(x > 0, k * x, alpha * np.expm1(beta * _xneg(x)))


def _eelu_dx(x, p):
    alpha, beta, k = p["alpha"], p["beta"], p["k"]
    return np.where(x > 0, k + 0.0 * x, alpha * beta * np.exp(beta * _xneg(x)))


def _eelu_dparam(x, p):
    alpha, beta = p["alpha"], p["beta"]
    e = np.exp(beta * _xneg(x))
    neg = x <= 0
    return {"alpha": np.where(neg, e - 1.0, 0.0),
            "beta": np.where(neg, x * alpha * e, 0.0)}


register(Kind(
    # k clamps a N(1, sigma) draw to [0, 2]; sigma ~ U(0, eps) per batch
    name="eelu", group=GROUP_ELU, family=FAMILY_STOCHASTIC,
    params={"alpha": ParamSpec(1.0, learnable=True), "beta": ParamSpec(1.0, learnable=True),
            "eps": ParamSpec(0.5), "k": ParamSpec(1.0, sampled=True)},
    value=_eelu, dx=_eelu_dx, dparam=_eelu_dparam,
    kinks=lambda p: (0.0,),
    range_fn=lambda p: Range(-p["alpha"], INF, False, False),
    limits=lambda p: (-p["alpha"], None),
    monotonic=True,
    validate=lambda p: (require((p["alpha"] > 0) & (p["beta"] > 0),
                                "eelu: alpha and beta must be > 0"),
                        require((0 < p["eps"]) & (p["eps"] <= 1),
                                "eelu: spread bound eps must lie in (0, 1]"),
                        require((0 <= p["k"]) & (p["k"] <= 2),
                                "eelu: sampled slope k must lie in [0, 2]")),
))


def _pdelu_u(x, p):
    # positive part of the deformed exponential argument; zero marks saturation
    return np.maximum(1.0 + (1.0 - p["t"]) * _xneg(x), 0.0)


def _pdelu(x, p):
    alpha, t = p["alpha"], p["t"]
    u = _pdelu_u(x, p)
    return np.where(x > 0, x, alpha * (u ** (1.0 / (1.0 - t)) - 1.0))


def _pdelu_dx(x, p):
    alpha, t = p["alpha"], p["t"]
    u = _pdelu_u(x, p)
    with np.errstate(divide="ignore"):
        d = np.where(u > 0, u ** (t / (1.0 - t)), 0.0)
    return np.where(x > 0, 1.0, alpha * d)


def _pdelu_dparam(x, p):
    t = p["t"]
    u = _pdelu_u(x, p)
    return {"alpha": np.where(x > 0, 0.0, u ** (1.0 / (1.0 - t)) - 1.0)}


def _pdelu_kinks(p):
    t = p["t"]
    kinks = [] if p["alpha"] == 1.0 else [0.0]
    if t < 1.0:
        kinks.append(-1.0 / (1.0 - t))  # saturation edge of the clamped power
    return tuple(kinks)


def _pdelu_range(p):
    closed = p["t"] < 1.0  # the clamp attains -alpha exactly
    return Range(-p["alpha"], INF, closed, False)


register(Kind(
    name="pdelu", group=GROUP_ELU, family=FAMILY_ADAPTIVE,
    params={"alpha": ParamSpec(1.0, learnable=True), "t": ParamSpec(0.9)},
    value=_pdelu, dx=_pdelu_dx, dparam=_pdelu_dparam,
    kinks=_pdelu_kinks,
    range_fn=_pdelu_range,
    limits=lambda p: (-p["alpha"], None),
    monotonic=True,
    validate=lambda p: (require(p["alpha"] > 0, "pdelu: alpha must be > 0"),
                        require(p["t"] > 0, "pdelu: deformation t must be > 0"),
                        require(np.abs(p["t"] - 1.0) >= 1e-9,
                                "pdelu: deformation t must differ from 1")),
))


def _elish(x, p):
    s = sigmoid(x)
    return np.where(x >= 0, x * s, np.expm1(_xneg(x)) * s)


def _elish_dx(x, p):
    s = sigmoid(x)
    sp = s * (1.0 - s)
    e = np.exp(_xneg(x))
    return np.where(x >= 0, s + x * sp, e * s + (e - 1.0) * sp)


register(Kind(
    name="elish", group=GROUP_ELU, family=FAMILY_FIXED, params={},
    value=_elish, dx=_elish_dx,
    range_fn=lambda p: Range(-1.0, INF, False, False),
    limits=lambda p: (0.0, None),
))


def _hard_gate(x):
    return np.clip((x + 1.0) / 2.0, 0.0, 1.0)


def _hard_elish(x, p):
    h = _hard_gate(x)
    return np.where(x >= 0, x * h, np.expm1(_xneg(x)) * h)


def _hard_elish_dx(x, p):
    h = _hard_gate(x)
    hp = np.where((x > -1.0) & (x <= 1.0), 0.5, 0.0)
    e = np.exp(_xneg(x))
    return np.where(x >= 0, h + x * hp, e * h + np.expm1(_xneg(x)) * hp)


register(Kind(
    name="hard_elish", group=GROUP_ELU, family=FAMILY_FIXED, params={},
    value=_hard_elish, dx=_hard_elish_dx,
    kinks=lambda p: (-1.0, 1.0),
    range_fn=lambda p: Range(-0.5, INF, False, False),
    limits=lambda p: (0.0, None),
))
