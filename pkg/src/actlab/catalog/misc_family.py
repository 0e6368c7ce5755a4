"""Self-gated and smooth-rectifier kinds, plus the identity passthrough."""

import math

import numpy as np

from ._math import (erf, gauss_cdf, gauss_pdf, sech2, sigmoid, sigmoid_prime,
                    softplus)
from .registry import (FAMILY_ADAPTIVE, FAMILY_FIXED, FAMILY_PARAMETRIC,
                       GROUP_MISC, INF, Kind, ParamSpec, Range, register,
                       require)


register(Kind(
    name="identity", group=GROUP_MISC, family=FAMILY_FIXED, params={},
    value=lambda x, p: x + 0.0,
    dx=lambda x, p: np.ones_like(x),
    monotonic=True,
    aliases=("linear",),
))


def _swish(x, p):
    return x * sigmoid(p["beta"] * x)


def _swish_dx(x, p):
    s = sigmoid(p["beta"] * x)
    return s + p["beta"] * x * s * (1.0 - s)


register(Kind(
    name="swish", group=GROUP_MISC, family=FAMILY_ADAPTIVE,
    params={"beta": ParamSpec(1.0, learnable=True)},
    value=_swish, dx=_swish_dx,
    dparam=lambda x, p: {"beta": x * x * sigmoid_prime(p["beta"] * x)},
    limits=lambda p: (0.0, None) if p["beta"] > 0 else (None, None),
    validate=lambda p: require(p["beta"] >= 0, "swish: gate scale beta must be >= 0"),
))


def _eswish(x, p):
    return p["beta"] * x * sigmoid(x)


def _eswish_dx(x, p):
    s = sigmoid(x)
    return p["beta"] * (s + x * s * (1.0 - s))


register(Kind(
    name="eswish", group=GROUP_MISC, family=FAMILY_ADAPTIVE,
    params={"beta": ParamSpec(1.25, learnable=True)},
    value=_eswish, dx=_eswish_dx,
    dparam=lambda x, p: {"beta": x * sigmoid(x)},
    limits=lambda p: (0.0, None),
    validate=lambda p: require((1 <= p["beta"]) & (p["beta"] <= 2),
                               "eswish: scale beta must lie in [1, 2]"),
))


def _hard_swish(x, p):
    return x * np.clip((x + 3.0) / 6.0, 0.0, 1.0)


def _hard_swish_dx(x, p):
    return np.where(x <= -3.0, 0.0, np.where(x <= 3.0, (2.0 * x + 3.0) / 6.0, 1.0))


register(Kind(
    name="hard_swish_piecewise", group=GROUP_MISC, family=FAMILY_FIXED, params={},
    value=_hard_swish, dx=_hard_swish_dx,
    kinks=lambda p: (-3.0, 3.0),
    range_fn=lambda p: Range(-0.375, INF, True, False),
    limits=lambda p: (0.0, None),
    aliases=("hard_swish",),
))


def _hard_swish_beta(x, p):
    return 2.0 * x * np.clip(0.2 * p["beta"] * x + 0.5, 0.0, 1.0)


def _hard_swish_beta_dx(x, p):
    bx = p["beta"] * x
    return np.where(bx <= -2.5, 0.0, np.where(bx <= 2.5, 0.8 * p["beta"] * x + 1.0, 2.0))


def _hard_swish_beta_dparam(x, p):
    inside = np.abs(p["beta"] * x) < 2.5
    return {"beta": np.where(inside, 0.4 * x * x, 0.0)}


register(Kind(
    # gated form 2x * hard_sigmoid(beta x); coincides with the piecewise
    # variant only at one gate scale, so both are exposed
    name="hard_swish_beta", group=GROUP_MISC, family=FAMILY_ADAPTIVE,
    params={"beta": ParamSpec(1.0, learnable=True)},
    value=_hard_swish_beta, dx=_hard_swish_beta_dx, dparam=_hard_swish_beta_dparam,
    kinks=lambda p: (-2.5 / p["beta"], 2.5 / p["beta"]),
    range_fn=lambda p: Range(-0.625 / p["beta"], INF, True, False),
    limits=lambda p: (0.0, None),
    validate=lambda p: require(p["beta"] > 0, "hard_swish_beta: beta must be > 0"),
))


register(Kind(
    name="softplus", group=GROUP_MISC, family=FAMILY_FIXED, params={},
    value=lambda x, p: softplus(x),
    dx=lambda x, p: sigmoid(x),
    range_fn=lambda p: Range(0.0, INF, False, False),
    limits=lambda p: (0.0, None),
    monotonic=True,
))

_SLU_SHIFT = 2.0 * math.log(2.0)


register(Kind(
    # slope/offset fixed by continuity and unit slope at the origin
    name="slu", group=GROUP_MISC, family=FAMILY_FIXED, params={},
    value=lambda x, p: np.where(x >= 0, x, 2.0 * softplus(np.minimum(x, 0.0)) - _SLU_SHIFT),
    dx=lambda x, p: np.where(x >= 0, 1.0, 2.0 * sigmoid(np.minimum(x, 0.0))),
    range_fn=lambda p: Range(-_SLU_SHIFT, INF, False, False),
    limits=lambda p: (-_SLU_SHIFT, None),
    monotonic=True,
))


def _mish(x, p):
    return x * np.tanh(softplus(x))


def _mish_dx(x, p):
    sp = softplus(x)
    t = np.tanh(sp)
    return t + x * (1.0 - t * t) * sigmoid(x)


register(Kind(
    name="mish", group=GROUP_MISC, family=FAMILY_FIXED, params={},
    value=_mish, dx=_mish_dx,
    range_fn=lambda p: Range(-0.31, INF, True, False),
    limits=lambda p: (0.0, None),
))


def mish_derivative_rational(x):
    """Rational form of the mish input-derivative: e^x * omega / delta^2.

    Valid only where e^{3x} stays finite; the registry derivative uses the
    overflow-safe chain-rule form instead.
    """
    x = np.asarray(x, dtype=float)
    ex = np.exp(x)
    omega = 4.0 * (x + 1.0) + 4.0 * ex**2 + ex**3 + ex * (4.0 * x + 6.0)
    delta = 2.0 * ex + ex**2 + 2.0
    return ex * omega / delta**2


def _gelu_erf(x, p):
    return x * gauss_cdf(x)


def _gelu_erf_dx(x, p):
    return gauss_cdf(x) + x * gauss_pdf(x)


register(Kind(
    name="gelu_erf", group=GROUP_MISC, family=FAMILY_FIXED, params={},
    value=_gelu_erf, dx=_gelu_erf_dx,
    range_fn=lambda p: Range(-0.2, INF, True, False),
    limits=lambda p: (0.0, None),
    aliases=("gelu",),
))

_GELU_C = math.sqrt(2.0 / math.pi)


def _gelu_tanh(x, p):
    u = _GELU_C * (x + 0.044715 * x**3)
    return 0.5 * x * (1.0 + np.tanh(u))


def _gelu_tanh_dx(x, p):
    u = _GELU_C * (x + 0.044715 * x**3)
    du = _GELU_C * (1.0 + 3.0 * 0.044715 * x**2)
    return 0.5 * (1.0 + np.tanh(u)) + 0.5 * x * sech2(u) * du


register(Kind(
    name="gelu_tanh", group=GROUP_MISC, family=FAMILY_FIXED, params={},
    value=_gelu_tanh, dx=_gelu_tanh_dx,
    range_fn=lambda p: Range(-0.2, INF, True, False),
    limits=lambda p: (0.0, None),
))


def _gelu_sigmoid(x, p):
    return x * sigmoid(1.702 * x)


def _gelu_sigmoid_dx(x, p):
    s = sigmoid(1.702 * x)
    return s + 1.702 * x * s * (1.0 - s)


register(Kind(
    name="gelu_sigmoid", group=GROUP_MISC, family=FAMILY_FIXED, params={},
    value=_gelu_sigmoid, dx=_gelu_sigmoid_dx,
    range_fn=lambda p: Range(-0.2, INF, True, False),
    limits=lambda p: (0.0, None),
))


def _sgelu(x, p):
    return p["alpha"] * x * erf(x / math.sqrt(2.0))


def _sgelu_dx(x, p):
    return p["alpha"] * (erf(x / math.sqrt(2.0)) + 2.0 * x * gauss_pdf(x))


register(Kind(
    name="sgelu", group=GROUP_MISC, family=FAMILY_PARAMETRIC,
    params={"alpha": ParamSpec(1.702)},
    value=_sgelu, dx=_sgelu_dx,
    range_fn=lambda p: Range(0.0, INF, True, False),
    validate=lambda p: require(p["alpha"] > 0, "sgelu: scale alpha must be > 0"),
))
