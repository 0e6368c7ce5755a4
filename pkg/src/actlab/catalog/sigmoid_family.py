"""Sigmoid-shaped kinds: squashing curves and their scaled/weighted relatives."""

import math

import numpy as np

from ._math import sech, sech2, sigmoid, sigmoid_prime, softplus
from .registry import (FAMILY_ADAPTIVE, FAMILY_FIXED, FAMILY_PARAMETRIC,
                       GROUP_SIGMOID, INF, Kind, ParamSpec, Range, register,
                       require)

E = math.e


def _logistic(x, p):
    return sigmoid(x)


def _logistic_dx(x, p):
    return sigmoid_prime(x)


register(Kind(
    name="logistic", group=GROUP_SIGMOID, family=FAMILY_FIXED, params={},
    value=_logistic, dx=_logistic_dx,
    range_fn=lambda p: Range(0.0, 1.0, False, False),
    limits=lambda p: (0.0, 1.0),
    monotonic=True,
    aliases=("sigmoid",),
))


register(Kind(
    name="tanh", group=GROUP_SIGMOID, family=FAMILY_FIXED, params={},
    value=lambda x, p: np.tanh(x),
    dx=lambda x, p: sech2(x),
    range_fn=lambda p: Range(-1.0, 1.0),
    limits=lambda p: (-1.0, 1.0),
    monotonic=True,
))


def _stanh(x, p):
    return p["b"] * np.tanh(p["a"] * x)


def _stanh_dx(x, p):
    return p["b"] * p["a"] * sech2(p["a"] * x)


register(Kind(
    # amplitude 1.7159 with slope 2/3 puts the unit-gain points at +-1
    name="stanh", group=GROUP_SIGMOID, family=FAMILY_PARAMETRIC,
    params={"b": ParamSpec(1.7159), "a": ParamSpec(2.0 / 3.0)},
    value=_stanh, dx=_stanh_dx,
    range_fn=lambda p: Range(-p["b"], p["b"]),
    limits=lambda p: (-p["b"], p["b"]),
    monotonic=True,
    validate=lambda p: (require(p["b"] > 0, "stanh: amplitude b must be > 0"),
                        require(p["a"] > 0, "stanh: slope a must be > 0")),
))


def _psf(x, p):
    # log-space power keeps (1+e^{-x})^{-m} finite for large m
    return np.exp(-p["m"] * softplus(-x))


def _psf_dx(x, p):
    return p["m"] * _psf(x, p) * (1.0 - sigmoid(x))


register(Kind(
    name="psf", group=GROUP_SIGMOID, family=FAMILY_PARAMETRIC,
    params={"m": ParamSpec(1.0)},
    value=_psf, dx=_psf_dx,
    range_fn=lambda p: Range(0.0, 1.0, False, False),
    limits=lambda p: (0.0, 1.0),
    monotonic=True,
    validate=lambda p: require(p["m"] > 0, "psf: exponent m must be > 0"),
))


def _resech(x, p):
    return x * sech(x)


def _resech_dx(x, p):
    return sech(x) * (1.0 - x * np.tanh(x))


register(Kind(
    name="resech", group=GROUP_SIGMOID, family=FAMILY_FIXED, params={},
    value=_resech, dx=_resech_dx,
    range_fn=lambda p: Range(-1.0, 1.0),
    limits=lambda p: (0.0, 0.0),
))


register(Kind(
    name="ssigmoid", group=GROUP_SIGMOID, family=FAMILY_FIXED, params={},
    value=lambda x, p: 4.0 * sigmoid(x) - 2.0,
    dx=lambda x, p: 4.0 * sigmoid_prime(x),
    range_fn=lambda p: Range(-2.0, 2.0),
    limits=lambda p: (-2.0, 2.0),
    monotonic=True,
))


def _ptanh(x, p):
    t = np.tanh(x)
    return np.where(x > 0, t, p["a"] * t)


def _ptanh_dx(x, p):
    d = sech2(x)
    return np.where(x > 0, d, p["a"] * d)


register(Kind(
    name="ptanh", group=GROUP_SIGMOID, family=FAMILY_PARAMETRIC,
    params={"a": ParamSpec(0.25)},
    value=_ptanh, dx=_ptanh_dx,
    kinks=lambda p: () if p["a"] == 1.0 else (0.0,),
    range_fn=lambda p: Range(-p["a"], 1.0, False, False),
    limits=lambda p: (-p["a"], 1.0),
    monotonic=True,
    validate=lambda p: require((p["a"] > 0) & (p["a"] < 1),
                               "ptanh: penalty a must lie in (0, 1)"),
))


def _hexpo(x, p):
    a, b, c, d = p["a"], p["b"], p["c"], p["d"]
    xn = np.minimum(x, 0.0)
    xp = np.maximum(x, 0.0)
    return np.where(x >= 0, -a * (np.exp(-xp / b) - 1.0), c * (np.exp(xn / d) - 1.0))


def _hexpo_dx(x, p):
    a, b, c, d = p["a"], p["b"], p["c"], p["d"]
    xn = np.minimum(x, 0.0)
    xp = np.maximum(x, 0.0)
    return np.where(x > 0, (a / b) * np.exp(-xp / b), (c / d) * np.exp(xn / d))


register(Kind(
    name="hexpo", group=GROUP_SIGMOID, family=FAMILY_PARAMETRIC,
    params={"a": ParamSpec(1.0), "b": ParamSpec(1.0),
            "c": ParamSpec(1.0), "d": ParamSpec(1.0)},
    value=_hexpo, dx=_hexpo_dx,
    kinks=lambda p: () if p["a"] / p["b"] == p["c"] / p["d"] else (0.0,),
    range_fn=lambda p: Range(-p["c"], p["a"], False, False),
    limits=lambda p: (-p["c"], p["a"]),
    monotonic=True,
    validate=lambda p: (require((p["a"] > 0) & (p["c"] > 0),
                                "hexpo: saturation levels a, c must be > 0"),
                        require((p["b"] >= 1e-9) & (p["d"] >= 1e-9),
                                "hexpo: decay scales b, d divide the input and must be >= 1e-9")),
))


def _silu(x, p):
    return x * sigmoid(x)


def _silu_dx(x, p):
    s = sigmoid(x)
    return s * (1.0 + x * (1.0 - s))


register(Kind(
    name="silu", group=GROUP_SIGMOID, family=FAMILY_FIXED, params={},
    value=_silu, dx=_silu_dx,
    range_fn=lambda p: Range(-0.5, INF, False, False),
    limits=lambda p: (0.0, None),
))


def _dsilu(x, p):
    s = sigmoid(x)
    return s * (1.0 + x * (1.0 - s))


def _dsilu_dx(x, p):
    s = sigmoid(x)
    return s * (1.0 - s) * (2.0 + x * (1.0 - 2.0 * s))


register(Kind(
    name="dsilu", group=GROUP_SIGMOID, family=FAMILY_FIXED, params={},
    value=_dsilu, dx=_dsilu_dx,
    range_fn=lambda p: Range(-0.1, 1.1),
    limits=lambda p: (0.0, 1.0),
))


register(Kind(
    name="lisht", group=GROUP_SIGMOID, family=FAMILY_FIXED, params={},
    value=lambda x, p: x * np.tanh(x),
    dx=lambda x, p: np.tanh(x) + x * sech2(x),
    range_fn=lambda p: Range(0.0, INF, True, False),
))


def _elliott(x, p):
    return x / (1.0 + np.abs(x))


def _elliott_dx(x, p):
    d = 1.0 + np.abs(x)
    return 1.0 / (d * d)


register(Kind(
    name="elliott", group=GROUP_SIGMOID, family=FAMILY_FIXED, params={},
    value=_elliott, dx=_elliott_dx,
    range_fn=lambda p: Range(-1.0, 1.0, False, False),
    limits=lambda p: (-1.0, 1.0),
    monotonic=True,
))


register(Kind(
    # variant rescaled into (0, 1)
    name="elliott_01", group=GROUP_SIGMOID, family=FAMILY_FIXED, params={},
    value=lambda x, p: 0.5 * x / (1.0 + np.abs(x)) + 0.5,
    dx=lambda x, p: 0.5 / (1.0 + np.abs(x)) ** 2,
    range_fn=lambda p: Range(0.0, 1.0, False, False),
    limits=lambda p: (0.0, 1.0),
    monotonic=True,
))


register(Kind(
    name="melliott", group=GROUP_SIGMOID, family=FAMILY_FIXED, params={},
    value=lambda x, p: x / np.sqrt(1.0 + x * x),
    dx=lambda x, p: (1.0 + x * x) ** -1.5,
    range_fn=lambda p: Range(-1.0, 1.0, False, False),
    limits=lambda p: (-1.0, 1.0),
    monotonic=True,
))


def _srs_den(x, p):
    with np.errstate(over="ignore"):
        return x / p["alpha"] + np.exp(-x / p["beta"])


def _srs(x, p):
    with np.errstate(invalid="ignore"):
        return np.where(np.isinf(_srs_den(x, p)), 0.0, x / _srs_den(x, p))


def _srs_dx(x, p):
    den = _srs_den(x, p)
    with np.errstate(over="ignore", invalid="ignore"):
        e = np.exp(-x / p["beta"])
        num = (1.0 + x / p["beta"]) * e
        return np.where(np.isinf(den), 0.0, num / (den * den))


def _srs_dparam(x, p):
    alpha, beta = p["alpha"], p["beta"]
    den = _srs_den(x, p)
    with np.errstate(over="ignore", invalid="ignore"):
        e = np.exp(-x / beta)
        d_alpha = np.where(np.isinf(den), 0.0, x * x / (alpha * alpha * den * den))
        d_beta = np.where(np.isinf(den), 0.0, -(x * x) * e / (beta * beta * den * den))
    return {"alpha": d_alpha, "beta": d_beta}


def _srs_validate(p):
    require(p["alpha"] > 0, "srs: alpha must be > 0")
    require(p["beta"] > 0, "srs: beta must be > 0")
    # the stated range |alpha*beta/(beta - alpha*e)| is singular at beta = alpha*e
    require(np.abs(p["beta"] - p["alpha"] * E) >= 1e-6,
            "srs: beta must differ from alpha*e by at least 1e-6 (pole guard)")


register(Kind(
    name="srs", group=GROUP_SIGMOID, family=FAMILY_ADAPTIVE,
    params={"alpha": ParamSpec(2.0, learnable=True),
            "beta": ParamSpec(3.0, learnable=True)},
    value=_srs, dx=_srs_dx, dparam=_srs_dparam,
    range_fn=lambda p: Range(p["alpha"] * p["beta"] / (p["beta"] - p["alpha"] * E),
                             p["alpha"], True, False),
    limits=lambda p: (0.0, p["alpha"]),
    validate=_srs_validate,
))


def _hard_sigmoid(x, p):
    return np.clip(0.2 * x + 0.5, 0.0, 1.0)


def _hard_sigmoid_dx(x, p):
    return np.where((x > -2.5) & (x <= 2.5), 0.2, 0.0)


register(Kind(
    name="hard_sigmoid", group=GROUP_SIGMOID, family=FAMILY_FIXED, params={},
    value=_hard_sigmoid, dx=_hard_sigmoid_dx,
    kinks=lambda p: (-2.5, 2.5),
    range_fn=lambda p: Range(0.0, 1.0),
    limits=lambda p: (0.0, 1.0),
    monotonic=True,
))


register(Kind(
    name="hard_tanh", group=GROUP_SIGMOID, family=FAMILY_FIXED, params={},
    value=lambda x, p: np.clip(x, -1.0, 1.0),
    dx=lambda x, p: np.where((x > -1.0) & (x <= 1.0), 1.0, 0.0),
    kinks=lambda p: (-1.0, 1.0),
    range_fn=lambda p: Range(-1.0, 1.0),
    limits=lambda p: (-1.0, 1.0),
    monotonic=True,
))
