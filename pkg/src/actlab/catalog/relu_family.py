"""Rectifier kinds: piecewise-linear units and their randomized/learnable variants."""

import numpy as np

from ._math import sech2
from .registry import (FAMILY_ADAPTIVE, FAMILY_FIXED, FAMILY_PARAMETRIC,
                       FAMILY_STOCHASTIC, GROUP_RELU, INF, Kind, ParamSpec,
                       Range, register, require)


register(Kind(
    name="relu", group=GROUP_RELU, family=FAMILY_FIXED, params={},
    value=lambda x, p: np.maximum(0.0, x),
    dx=lambda x, p: np.where(x > 0, 1.0, 0.0),
    kinks=lambda p: (0.0,),
    range_fn=lambda p: Range(0.0, INF, True, False),
    limits=lambda p: (0.0, None),
    monotonic=True,
))


def _lrelu(x, p):
    return np.where(x >= 0, x, p["alpha"] * x)


def _lrelu_dx(x, p):
    return np.where(x > 0, 1.0, p["alpha"])


register(Kind(
    name="leaky_relu", group=GROUP_RELU, family=FAMILY_PARAMETRIC,
    params={"alpha": ParamSpec(0.01)},
    value=_lrelu, dx=_lrelu_dx,
    kinks=lambda p: () if p["alpha"] == 1.0 else (0.0,),
    monotonic=True,
    validate=lambda p: require(p["alpha"] >= 0, "leaky_relu: slope alpha must be >= 0"),
    aliases=("lrelu",),
))


register(Kind(
    name="prelu", group=GROUP_RELU, family=FAMILY_ADAPTIVE,
    params={"alpha": ParamSpec(0.25, learnable=True)},
    value=_lrelu, dx=_lrelu_dx,
    dparam=lambda x, p: {"alpha": np.where(x >= 0, 0.0, x)},
    kinks=lambda p: () if p["alpha"] == 1.0 else (0.0,),
    monotonic=True,
))


register(Kind(
    # negative slope r ~ U(l, u) while training, (l+u)/2 at eval time
    name="rrelu", group=GROUP_RELU, family=FAMILY_STOCHASTIC,
    params={"l": ParamSpec(0.125), "u": ParamSpec(1.0 / 3.0),
            "r": ParamSpec((0.125 + 1.0 / 3.0) / 2.0, sampled=True)},
    value=lambda x, p: np.where(x >= 0, x, p["r"] * x),
    dx=lambda x, p: np.where(x > 0, 1.0, p["r"]),
    kinks=lambda p: (0.0,),
    monotonic=True,
    validate=lambda p: require((0 <= p["l"]) & (p["l"] < p["u"]) & (p["u"] < 1),
                               "rrelu: slope bounds must satisfy 0 <= l < u < 1"),
))


def _ptelu(x, p):
    xn = np.minimum(x, 0.0)
    return np.where(x > 0, x, p["alpha"] * np.tanh(p["beta"] * xn))


def _ptelu_dx(x, p):
    xn = np.minimum(x, 0.0)
    return np.where(x > 0, 1.0, p["alpha"] * p["beta"] * sech2(p["beta"] * xn))


def _ptelu_dparam(x, p):
    xn = np.minimum(x, 0.0)
    neg = x <= 0
    return {"alpha": np.where(neg, np.tanh(p["beta"] * xn), 0.0),
            "beta": np.where(neg, p["alpha"] * xn * sech2(p["beta"] * xn), 0.0)}


register(Kind(
    name="ptelu", group=GROUP_RELU, family=FAMILY_ADAPTIVE,
    params={"alpha": ParamSpec(1.0, learnable=True),
            "beta": ParamSpec(1.0, learnable=True)},
    value=_ptelu, dx=_ptelu_dx, dparam=_ptelu_dparam,
    kinks=lambda p: () if p["alpha"] * p["beta"] == 1.0 else (0.0,),
    range_fn=lambda p: Range(-p["alpha"], INF, False, False),
    limits=lambda p: (-p["alpha"], None),
    monotonic=True,
    validate=lambda p: require((p["alpha"] >= 0) & (p["beta"] >= 0),
                               "ptelu: alpha and beta must be >= 0"),
))


register(Kind(
    name="frelu", group=GROUP_RELU, family=FAMILY_ADAPTIVE,
    params={"b": ParamSpec(-1.0, learnable=True)},
    value=lambda x, p: np.where(x > 0, x + p["b"], p["b"] + 0.0 * x),
    dx=lambda x, p: np.where(x > 0, 1.0, 0.0),
    dparam=lambda x, p: {"b": np.ones_like(x)},
    kinks=lambda p: (0.0,),
    range_fn=lambda p: Range(p["b"], INF, True, False),
    limits=lambda p: (p["b"], None),
    monotonic=True,
))


register(Kind(
    # input offset a ~ N(0, sigma) per training batch, 0 at eval time
    name="rtrelu", group=GROUP_RELU, family=FAMILY_STOCHASTIC,
    params={"sigma": ParamSpec(0.5), "a": ParamSpec(0.0, sampled=True)},
    value=lambda x, p: np.maximum(x + p["a"], 0.0),
    dx=lambda x, p: np.where(x + p["a"] > 0, 1.0, 0.0),
    kinks=lambda p: (-np.min(p["a"]), -np.max(p["a"])) if np.ndim(p["a"]) else (-p["a"],),
    range_fn=lambda p: Range(0.0, INF, True, False),
    limits=lambda p: (0.0, None),
    monotonic=True,
    validate=lambda p: require(p["sigma"] > 0, "rtrelu: offset spread sigma must be > 0"),
))


register(Kind(
    name="rtprelu", group=GROUP_RELU, family=FAMILY_STOCHASTIC,
    params={"k": ParamSpec(0.25, learnable=True), "sigma": ParamSpec(0.5),
            "a": ParamSpec(0.0, sampled=True)},
    value=lambda x, p: np.where(x + p["a"] > 0, x + p["a"], p["k"] * (x + p["a"])),
    dx=lambda x, p: np.where(x + p["a"] > 0, 1.0, p["k"]),
    dparam=lambda x, p: {"k": np.where(x + p["a"] > 0, 0.0, x + p["a"])},
    kinks=lambda p: (-np.min(p["a"]), -np.max(p["a"])) if np.ndim(p["a"]) else (-p["a"],),
    monotonic=True,
    validate=lambda p: require(p["sigma"] > 0, "rtprelu: offset spread sigma must be > 0"),
))


register(Kind(
    name="shifted_relu", group=GROUP_RELU, family=FAMILY_FIXED, params={},
    value=lambda x, p: np.maximum(-1.0, x),
    dx=lambda x, p: np.where(x > -1.0, 1.0, 0.0),
    kinks=lambda p: (-1.0,),
    range_fn=lambda p: Range(-1.0, INF, True, False),
    limits=lambda p: (-1.0, None),
    monotonic=True,
))


register(Kind(
    name="drelu", group=GROUP_RELU, family=FAMILY_PARAMETRIC,
    params={"delta": ParamSpec(0.5)},
    value=lambda x, p: np.maximum(x, -p["delta"]),
    dx=lambda x, p: np.where(x > -p["delta"], 1.0, 0.0),
    kinks=lambda p: (-p["delta"],),
    range_fn=lambda p: Range(-p["delta"], INF, True, False),
    limits=lambda p: (-p["delta"], None),
    monotonic=True,
    validate=lambda p: require(p["delta"] >= 0, "drelu: displacement delta must be >= 0"),
))


register(Kind(
    name="vrelu", group=GROUP_RELU, family=FAMILY_FIXED, params={},
    value=lambda x, p: np.abs(x),
    dx=lambda x, p: np.where(x > 0, 1.0, -1.0),
    kinks=lambda p: (0.0,),
    range_fn=lambda p: Range(0.0, INF, True, False),
))


register(Kind(
    name="softsign", group=GROUP_RELU, family=FAMILY_FIXED, params={},
    value=lambda x, p: x / (1.0 + np.abs(x)),
    dx=lambda x, p: 1.0 / (1.0 + np.abs(x)) ** 2,
    range_fn=lambda p: Range(-1.0, 1.0, False, False),
    limits=lambda p: (-1.0, 1.0),
    monotonic=True,
))


def _sign_relu(x, p):
    return np.where(x >= 0, x, p["a"] * x / (1.0 + np.abs(x)))


def _sign_relu_dx(x, p):
    return np.where(x > 0, 1.0, p["a"] / (1.0 + np.abs(x)) ** 2)


def _sign_relu_range(p):
    if p["a"] == 0:
        return Range(0.0, INF, True, False)
    return Range(-p["a"], INF, False, False)


register(Kind(
    name="sign_relu", group=GROUP_RELU, family=FAMILY_PARAMETRIC,
    params={"a": ParamSpec(1.0)},
    value=_sign_relu, dx=_sign_relu_dx,
    kinks=lambda p: () if p["a"] == 1.0 else (0.0,),
    range_fn=_sign_relu_range,
    limits=lambda p: (-p["a"], None),
    monotonic=True,
    validate=lambda p: require(p["a"] >= 0, "sign_relu: negative-lobe scale a must be >= 0"),
))


def _blu(x, p):
    return p["beta"] * (np.sqrt(x * x + 1.0) - 1.0) + x


def _blu_dx(x, p):
    return p["beta"] * x / np.sqrt(x * x + 1.0) + 1.0


def _blu_range(p):
    if p["beta"] == 1.0:
        return Range(-1.0, INF, False, False)
    if p["beta"] == -1.0:
        return Range(-INF, 1.0, False, False)
    return Range(-INF, INF, False, False)


register(Kind(
    name="blu", group=GROUP_RELU, family=FAMILY_ADAPTIVE,
    params={"beta": ParamSpec(0.5, learnable=True)},
    value=_blu, dx=_blu_dx,
    dparam=lambda x, p: {"beta": np.sqrt(x * x + 1.0) - 1.0},
    range_fn=_blu_range,
    monotonic=True,
    validate=lambda p: require((-1 <= p["beta"]) & (p["beta"] <= 1),
                               "blu: bend beta must lie in [-1, 1]"),
))


def _sshape(x, p):
    r, a, l, b = p["r"], p["a"], p["l"], p["b"]
    return np.where(x >= r, r + a * (x - r), np.where(x <= l, l + b * (x - l), x))


def _sshape_dx(x, p):
    r, a, l, b = p["r"], p["a"], p["l"], p["b"]
    return np.where(x > r, a, np.where(x <= l, b, 1.0))


def _sshape_dparam(x, p):
    r, a, l, b = p["r"], p["a"], p["l"], p["b"]
    hi = (x >= r).astype(float)
    lo = (x <= l).astype(float)
    return {"r": hi * (1.0 - a), "a": hi * (x - r), "l": lo * (1.0 - b), "b": lo * (x - l)}


register(Kind(
    name="s_shaped_relu", group=GROUP_RELU, family=FAMILY_ADAPTIVE,
    params={"r": ParamSpec(0.4, learnable=True), "a": ParamSpec(0.2, learnable=True),
            "l": ParamSpec(-0.4, learnable=True), "b": ParamSpec(0.2, learnable=True)},
    value=_sshape, dx=_sshape_dx, dparam=_sshape_dparam,
    kinks=lambda p: tuple(k for k, s in ((p["l"], p["b"]), (p["r"], p["a"])) if s != 1.0),
    monotonic=True,
    validate=lambda p: require(p["l"] <= p["r"],
                               "s_shaped_relu: thresholds must satisfy l <= r"),
))


register(Kind(
    # positive slope r ~ U(1-alpha, 1+alpha) while training, 1 at eval time
    name="erelu", group=GROUP_RELU, family=FAMILY_STOCHASTIC,
    params={"alpha": ParamSpec(0.5), "r": ParamSpec(1.0, sampled=True)},
    value=lambda x, p: np.where(x > 0, p["r"] * x, 0.0),
    dx=lambda x, p: np.where(x > 0, p["r"], 0.0),
    kinks=lambda p: (0.0,),
    range_fn=lambda p: Range(0.0, INF, True, False),
    limits=lambda p: (0.0, None),
    monotonic=True,
    validate=lambda p: require((0 < p["alpha"]) & (p["alpha"] < 1),
                               "erelu: fluctuation alpha must lie in (0, 1)"),
))


register(Kind(
    name="eprelu", group=GROUP_RELU, family=FAMILY_STOCHASTIC,
    params={"a": ParamSpec(0.2, learnable=True), "alpha": ParamSpec(0.5),
            "r": ParamSpec(1.0, sampled=True)},
    value=lambda x, p: np.where(x > 0, p["r"] * x, p["a"] * x),
    dx=lambda x, p: np.where(x > 0, p["r"], p["a"]),
    dparam=lambda x, p: {"a": np.where(x > 0, 0.0, x)},
    kinks=lambda p: (0.0,),
    monotonic=True,
    validate=lambda p: require((0 < p["alpha"]) & (p["alpha"] < 1),
                               "eprelu: fluctuation alpha must lie in (0, 1)"),
))


def _lisa(x, p):
    a1, a2 = p["alpha1"], p["alpha2"]
    return np.where(x > 1, a1 * x - a1 + 1.0, np.where(x < 0, a2 * x, x))


def _lisa_dx(x, p):
    a1, a2 = p["alpha1"], p["alpha2"]
    return np.where(x > 1, a1, np.where(x < 0, a2, 1.0))


def _lisa_kinks(p):
    return tuple(k for k, s in ((0.0, p["alpha2"]), (1.0, p["alpha1"])) if s != 1.0)


register(Kind(
    name="lisa", group=GROUP_RELU, family=FAMILY_PARAMETRIC,
    params={"alpha1": ParamSpec(0.4), "alpha2": ParamSpec(0.4)},
    value=_lisa, dx=_lisa_dx,
    kinks=_lisa_kinks,
    monotonic=True,
))


def _alisa_dparam(x, p):
    return {"alpha1": np.where(x > 1, x - 1.0, 0.0),
            "alpha2": np.where(x < 0, x, 0.0)}


register(Kind(
    name="alisa", group=GROUP_RELU, family=FAMILY_ADAPTIVE,
    params={"alpha1": ParamSpec(0.4, learnable=True),
            "alpha2": ParamSpec(0.4, learnable=True)},
    value=_lisa, dx=_lisa_dx, dparam=_alisa_dparam,
    kinks=_lisa_kinks,
    monotonic=True,
))


register(Kind(
    name="brelu", group=GROUP_RELU, family=FAMILY_PARAMETRIC,
    params={"a": ParamSpec(1.0)},
    value=lambda x, p: np.minimum(np.maximum(0.0, x), p["a"]),
    dx=lambda x, p: np.where((x > 0) & (x <= p["a"]), 1.0, 0.0),
    kinks=lambda p: (0.0, p["a"]),
    range_fn=lambda p: Range(0.0, p["a"]),
    limits=lambda p: (0.0, p["a"]),
    monotonic=True,
    validate=lambda p: require(p["a"] > 0, "brelu: output bound a must be > 0"),
))


def _blrelu(x, p):
    a = p["a"]
    # 0.99a offset keeps the upper oblique segment continuous at x = a
    return np.where(x <= 0, 0.01 * x, np.where(x <= a, x, 0.01 * x + 0.99 * a))


register(Kind(
    name="blrelu", group=GROUP_RELU, family=FAMILY_PARAMETRIC,
    params={"a": ParamSpec(1.0)},
    value=_blrelu,
    dx=lambda x, p: np.where((x > 0) & (x <= p["a"]), 1.0, 0.01),
    kinks=lambda p: (0.0, p["a"]),
    monotonic=True,
    validate=lambda p: require(p["a"] > 0, "blrelu: knee a must be > 0"),
))


def _bif(x, p):
    a = p["a"]
    return np.where(x < -a, -x - a / 2.0, np.where(x > a, x - a / 2.0, x * x / (2.0 * a)))


register(Kind(
    name="bif", group=GROUP_RELU, family=FAMILY_PARAMETRIC,
    params={"a": ParamSpec(1.0)},
    value=_bif,
    dx=lambda x, p: np.where(x < -p["a"], -1.0, np.where(x > p["a"], 1.0, x / p["a"])),
    range_fn=lambda p: Range(0.0, INF, True, False),
    validate=lambda p: require(p["a"] > 0, "bif: smoothing width a must be > 0"),
))


def _bbif(x, p):
    a, b = p["a"], p["b"]
    edge = b + a / 2.0
    conds = [x < -edge, x < -a, x <= a, x <= edge]
    choices = [np.full_like(x, b), -x - a / 2.0, x * x / (2.0 * a), x - a / 2.0]
    return np.select(conds, choices, default=b)


def _bbif_dx(x, p):
    a, b = p["a"], p["b"]
    edge = b + a / 2.0
    conds = [x <= -edge, x < -a, x <= a, x <= edge]
    choices = [np.zeros_like(x), np.full_like(x, -1.0), x / a, np.ones_like(x)]
    return np.select(conds, choices, default=0.0)


register(Kind(
    name="bbif", group=GROUP_RELU, family=FAMILY_PARAMETRIC,
    params={"a": ParamSpec(1.0), "b": ParamSpec(1.0)},
    value=_bbif, dx=_bbif_dx,
    kinks=lambda p: (-(p["b"] + p["a"] / 2.0), p["b"] + p["a"] / 2.0),
    range_fn=lambda p: Range(0.0, p["b"]),
    limits=lambda p: (p["b"], p["b"]),
    validate=lambda p: (require(p["a"] > 0, "bbif: smoothing width a must be > 0"),
                        require(p["b"] > 0, "bbif: output bound b must be > 0")),
))


def _reltanh(x, p):
    lp, ln_ = p["lambda_pos"], p["lambda_neg"]
    mid = np.tanh(np.clip(x, ln_, lp))
    out = np.where(x >= lp, sech2(lp) * (x - lp) + np.tanh(lp),
                   np.where(x <= ln_, sech2(ln_) * (x - ln_) + np.tanh(ln_), mid))
    return out


def _reltanh_dx(x, p):
    lp, ln_ = p["lambda_pos"], p["lambda_neg"]
    return np.where(x >= lp, sech2(lp), np.where(x <= ln_, sech2(ln_), sech2(x)))


def _tanh_second(x):
    t = np.tanh(x)
    return -2.0 * t * (1.0 - t * t)


def _reltanh_dparam(x, p):
    lp, ln_ = p["lambda_pos"], p["lambda_neg"]
    return {"lambda_pos": np.where(x >= lp, _tanh_second(lp) * (x - lp), 0.0),
            "lambda_neg": np.where(x <= ln_, _tanh_second(ln_) * (x - ln_), 0.0)}


def _reltanh_validate(p):
    require(p["lambda_neg"] < p["lambda_pos"],
            "reltanh: thresholds must satisfy lambda_neg < lambda_pos")
    require((p["lambda_pos_lower"] <= p["lambda_pos"]) & (p["lambda_pos"] <= p["lambda_pos_upper"]),
            "reltanh: lambda_pos must lie within [lambda_pos_lower, lambda_pos_upper]")
    require((p["lambda_neg_lower"] <= p["lambda_neg"]) & (p["lambda_neg"] <= p["lambda_neg_upper"]),
            "reltanh: lambda_neg must lie within [lambda_neg_lower, lambda_neg_upper]")


register(Kind(
    name="reltanh", group=GROUP_RELU, family=FAMILY_ADAPTIVE,
    params={"lambda_pos": ParamSpec(1.0, learnable=True),
            "lambda_neg": ParamSpec(-1.0, learnable=True),
            "lambda_pos_lower": ParamSpec(0.05), "lambda_pos_upper": ParamSpec(2.0),
            "lambda_neg_lower": ParamSpec(-2.0), "lambda_neg_upper": ParamSpec(-0.05)},
    value=_reltanh, dx=_reltanh_dx, dparam=_reltanh_dparam,
    monotonic=True,
    validate=_reltanh_validate,
))


def _plu(x, p):
    alpha, c = p["alpha"], p["c"]
    return np.maximum(alpha * (x + c) - c, np.minimum(alpha * (x - c) + c, x))


def _plu_dx(x, p):
    alpha, c = p["alpha"], p["c"]
    return np.where(x > c, alpha, np.where(x <= -c, alpha, 1.0))


register(Kind(
    name="plu", group=GROUP_RELU, family=FAMILY_PARAMETRIC,
    params={"alpha": ParamSpec(0.1), "c": ParamSpec(1.0)},
    value=_plu, dx=_plu_dx,
    kinks=lambda p: () if p["alpha"] == 1.0 else (-p["c"], p["c"]),
    monotonic=True,
    validate=lambda p: (require(p["alpha"] > 0, "plu: outer slope alpha must be > 0"),
                        require(p["c"] > 0, "plu: knee c must be > 0")),
))


register(Kind(
    name="nlrelu", group=GROUP_RELU, family=FAMILY_PARAMETRIC,
    params={"beta": ParamSpec(1.0)},
    value=lambda x, p: np.log(p["beta"] * np.maximum(0.0, x) + 1.0),
    dx=lambda x, p: np.where(x > 0, p["beta"] / (p["beta"] * np.maximum(x, 0.0) + 1.0), 0.0),
    kinks=lambda p: (0.0,),
    range_fn=lambda p: Range(0.0, INF, True, False),
    limits=lambda p: (0.0, None),
    monotonic=True,
    validate=lambda p: require(p["beta"] > 0, "nlrelu: log scale beta must be > 0"),
))


# -- multi-bin trainable linear unit -----------------------------------------

_MTLU_DEFAULT_ANCHORS = (-0.5, 0.0, 0.5)
_MTLU_DEFAULT_SLOPES = (0.0, 0.0, 1.0, 1.0)     # ReLU-like start
_MTLU_DEFAULT_OFFSETS = (0.0, 0.0, 0.0, 0.0)


def _mtlu_defaults():
    out = {}
    for i, c in enumerate(_MTLU_DEFAULT_ANCHORS):
        out[f"c_{i}"] = c
    for i, a in enumerate(_MTLU_DEFAULT_SLOPES):
        out[f"a_{i}"] = a
    for i, b in enumerate(_MTLU_DEFAULT_OFFSETS):
        out[f"b_{i}"] = b
    return out


def _mtlu_arrays(p):
    n_anchor = sum(1 for k in p if k.startswith("c_"))
    c = np.array([p[f"c_{i}"] for i in range(n_anchor)], dtype=float)
    a = np.array([p[f"a_{i}"] for i in range(n_anchor + 1)], dtype=float)
    b = np.array([p[f"b_{i}"] for i in range(n_anchor + 1)], dtype=float)
    return c, a, b


def _mtlu_resolve(user):
    """Bin count is a structural hyperparameter: custom anchor sets replace the
    default layout wholesale rather than merging with it."""
    from .registry import InvalidParameterError
    if not user:
        return _mtlu_defaults()
    if not any(k.startswith("c_") for k in user):
        out = _mtlu_defaults()
        for k, v in user.items():
            if k not in out:
                raise InvalidParameterError(f"mtlu: unknown parameter {k!r}")
            out[k] = float(v)
        return out
    n_anchor = sum(1 for k in user if k.startswith("c_"))
    expected = ({f"c_{i}" for i in range(n_anchor)}
                | {f"a_{i}" for i in range(n_anchor + 1)}
                | {f"b_{i}" for i in range(n_anchor + 1)})
    if set(user) != expected:
        raise InvalidParameterError(
            "mtlu: a custom bin layout must supply exactly "
            f"c_0..c_{n_anchor - 1}, a_0..a_{n_anchor}, b_0..b_{n_anchor}")
    return {k: float(v) for k, v in user.items()}


def _mtlu_validate(p):
    c, _, _ = _mtlu_arrays(p)
    require(len(c) >= 1, "mtlu: at least one anchor point is required")
    if len(c) > 1:
        d = np.diff(c)
        require(np.all(d > 0), "mtlu: anchor points c_k must be strictly increasing")
        require(np.allclose(d, d[0], rtol=1e-9, atol=1e-12),
                "mtlu: anchor points c_k must be uniformly spaced")


def _mtlu_bin(x, c):
    return np.searchsorted(c, x, side="left")


def _mtlu(x, p):
    c, a, b = _mtlu_arrays(p)
    i = _mtlu_bin(x, c)
    return a[i] * x + b[i]


def _mtlu_dx(x, p):
    c, a, _ = _mtlu_arrays(p)
    return a[_mtlu_bin(x, c)]


def _mtlu_dparam(x, p):
    c, a, b = _mtlu_arrays(p)
    i = _mtlu_bin(x, c)
    out = {}
    for k in range(len(a)):
        hit = (i == k).astype(float)
        out[f"a_{k}"] = hit * x
        out[f"b_{k}"] = hit
    return out


def _mtlu_learnables(p):
    return tuple(k for k in p if k.startswith(("a_", "b_")))


register(Kind(
    name="mtlu", group=GROUP_RELU, family=FAMILY_ADAPTIVE,
    params={name: ParamSpec(v, learnable=name.startswith(("a_", "b_")))
            for name, v in _mtlu_defaults().items()},
    value=_mtlu, dx=_mtlu_dx, dparam=_mtlu_dparam,
    kinks=lambda p: tuple(_mtlu_arrays(p)[0]),
    monotonic=True,
    validate=_mtlu_validate,
    resolve=_mtlu_resolve,
    learnables_of=_mtlu_learnables,
))
