"""Ensemble and learnable-shape activations built from the catalog kinds:
mixed/gated/hierarchical combiners, affine/convex hull combinations,
piecewise-linear hinge sums, hat-function sums, look-up table units,
Gaussian mixtures, and shifted-sigmoid pairs.

Every class exposes the same small protocol used by the gradient checker:
value / d_dx / d_dparams / param_dict / with_param / kinks (plus winner for
max-type combiners), and JSON round-tripping via to_json / from_json.
"""

import math
from dataclasses import dataclass

import numpy as np

from .catalog import registry
from .catalog._math import sigmoid, sigmoid_prime
from .errors import ActivationError, InvalidParameterError


def _as_x(x):
    return np.asarray(x, dtype=float)


def _raw_replace(obj, **changes):
    """Copy with fields changed, skipping __post_init__ validation.

    Finite-difference probes nudge single parameters slightly outside the
    validated box (e.g. rho = -1e-6); the formulas remain well defined there.
    """
    new = object.__new__(type(obj))
    for f in obj.__dataclass_fields__:
        object.__setattr__(new, f, changes.get(f, getattr(obj, f)))
    return new


def _base(kind, params=None):
    info = registry.get(kind)
    return info, registry.resolve_params(info, params)


def _base_value(kind, params, x):
    info, p = _base(kind, params)
    return np.asarray(info.value(x, p), dtype=float)


def _base_dx(kind, params, x):
    info, p = _base(kind, params)
    return np.asarray(info.dx(x, p), dtype=float)


def _base_kinks(kind, params=None):
    info, p = _base(kind, params)
    return tuple(float(k) for k in info.kinks(p))


_DEFAULT_LEFT = ("leaky_relu", {"alpha": 0.01})
_DEFAULT_RIGHT = ("elu", {"alpha": 1.0})


@dataclass(frozen=True)
class MixedActivation:
    """Fixed blend rho * left + (1 - rho) * right of two base activations."""

    rho: float = 0.5
    left: tuple = _DEFAULT_LEFT
    right: tuple = _DEFAULT_RIGHT

    name = "mixed"

    def __post_init__(self):
        if not 0.0 <= self.rho <= 1.0:
            raise InvalidParameterError("mixed: blend rho must lie in [0, 1]")

    def value(self, x):
        x = _as_x(x)
        return self.rho * _base_value(*self.left, x) + (1.0 - self.rho) * _base_value(*self.right, x)

    def d_dx(self, x):
        x = _as_x(x)
        return self.rho * _base_dx(*self.left, x) + (1.0 - self.rho) * _base_dx(*self.right, x)

    def d_dparams(self, x):
        x = _as_x(x)
        return {"rho": _base_value(*self.left, x) - _base_value(*self.right, x)}

    def param_dict(self):
        return {"rho": self.rho}

    def with_param(self, name, value):
        if name != "rho":
            raise KeyError(name)
        return _raw_replace(self, rho=float(value))

    def kinks(self):
        return tuple(sorted(set(_base_kinks(*self.left)) | set(_base_kinks(*self.right))))

    def to_json(self):
        return {"variant": self.name, "rho": self.rho,
                "left": list(self.left[0:1]) + [self.left[1]],
                "right": list(self.right[0:1]) + [self.right[1]]}


@dataclass(frozen=True)
class GatedActivation:
    """Input-adaptive blend: tau = sigmoid(omega * x) gates left vs right."""

    omega: float = 1.0
    left: tuple = _DEFAULT_LEFT
    right: tuple = _DEFAULT_RIGHT

    name = "gated"

    def _tau(self, x):
        return sigmoid(self.omega * x)

    def value(self, x):
        x = _as_x(x)
        t = self._tau(x)
        return t * _base_value(*self.left, x) + (1.0 - t) * _base_value(*self.right, x)

    def d_dx(self, x):
        x = _as_x(x)
        t = self._tau(x)
        dt = self.omega * sigmoid_prime(self.omega * x)
        diff = _base_value(*self.left, x) - _base_value(*self.right, x)
        return dt * diff + t * _base_dx(*self.left, x) + (1.0 - t) * _base_dx(*self.right, x)

    def d_dparams(self, x):
        x = _as_x(x)
        diff = _base_value(*self.left, x) - _base_value(*self.right, x)
        return {"omega": x * sigmoid_prime(self.omega * x) * diff}

    def param_dict(self):
        return {"omega": self.omega}

    def with_param(self, name, value):
        if name != "omega":
            raise KeyError(name)
        return _raw_replace(self, omega=float(value))

    def kinks(self):
        return tuple(sorted(set(_base_kinks(*self.left)) | set(_base_kinks(*self.right))))

    def to_json(self):
        return {"variant": self.name, "omega": self.omega,
                "left": [self.left[0], self.left[1]],
                "right": [self.right[0], self.right[1]]}


@dataclass(frozen=True)
class HierarchicalActivation:
    """Winner-take-all over gated middle nodes.

    Each middle node blends a pair of low-level activations with its own
    gating mask; the output is the maximum middle value (lowest index wins
    ties). Gradients flow only through the winning node.
    """

    omegas: tuple = (1.0, -1.0)
    pairs: tuple = None     # per-node ((kind, params), (kind, params))

    name = "hierarchical"

    def __post_init__(self):
        if len(self.omegas) < 1:
            raise ActivationError("hierarchical: at least one middle node required")
        object.__setattr__(self, "omegas", tuple(float(w) for w in self.omegas))
        pairs = self.pairs
        if pairs is None:
            pairs = tuple((_DEFAULT_LEFT, _DEFAULT_RIGHT) for _ in self.omegas)
        if len(pairs) != len(self.omegas):
            raise ActivationError("hierarchical: one low-level pair per middle node")
        object.__setattr__(self, "pairs", tuple(pairs))

    def _middles(self, x):
        outs = []
        for w, (left, right) in zip(self.omegas, self.pairs):
            t = sigmoid(w * x)
            outs.append(t * _base_value(*left, x) + (1.0 - t) * _base_value(*right, x))
        return np.stack(outs)

    def winner(self, x):
        return np.argmax(self._middles(_as_x(x)), axis=0)

    def value(self, x):
        return np.max(self._middles(_as_x(x)), axis=0)

    def d_dx(self, x):
        x = _as_x(x)
        win = self.winner(x)
        out = np.zeros_like(x, dtype=float)
        for m, (w, (left, right)) in enumerate(zip(self.omegas, self.pairs)):
            mask = win == m
            if not np.any(mask):
                continue
            t = sigmoid(w * x)
            dt = w * sigmoid_prime(w * x)
            diff = _base_value(*left, x) - _base_value(*right, x)
            d = dt * diff + t * _base_dx(*left, x) + (1.0 - t) * _base_dx(*right, x)
            out = np.where(mask, d, out)
        return out

    def d_dparams(self, x):
        x = _as_x(x)
        win = self.winner(x)
        grads = {}
        for m, (w, (left, right)) in enumerate(zip(self.omegas, self.pairs)):
            diff = _base_value(*left, x) - _base_value(*right, x)
            g = x * sigmoid_prime(w * x) * diff
            grads[f"omega_{m}"] = np.where(win == m, g, 0.0)
        return grads

    def param_dict(self):
        return {f"omega_{m}": w for m, w in enumerate(self.omegas)}

    def with_param(self, name, value):
        if not name.startswith("omega_"):
            raise KeyError(name)
        idx = int(name.split("_", 1)[1])
        omegas = list(self.omegas)
        omegas[idx] = float(value)
        return _raw_replace(self, omegas=tuple(omegas))

    def kinks(self):
        ks = set()
        for left, right in self.pairs:
            ks |= set(_base_kinks(*left)) | set(_base_kinks(*right))
        return tuple(sorted(ks))

    def to_json(self):
        return {"variant": self.name, "omegas": list(self.omegas),
                "pairs": [[[l[0], l[1]], [r[0], r[1]]] for l, r in self.pairs]}


_HULL_BASE_SETS = {
    ("identity", "relu"), ("identity", "tanh"),
    ("relu", "tanh"), ("identity", "relu", "tanh"),
}


@dataclass(frozen=True)
class HullCombination:
    """Linear combination sum c_i * phi_i over a fixed base set.

    Affine mode constrains sum(c) = 1; convex mode additionally needs every
    coefficient nonnegative (which preserves base monotonicity).
    """

    mode: str = "affine"
    bases: tuple = ("identity", "relu", "tanh")
    coeffs: tuple = (0.5, 0.3, 0.2)

    def __post_init__(self):
        if self.mode not in ("affine", "convex"):
            raise InvalidParameterError("hull: mode must be 'affine' or 'convex'")
        bases = tuple(registry.canonical_name(b) for b in self.bases)
        if bases not in _HULL_BASE_SETS:
            raise InvalidParameterError(
                f"hull: base set {bases} not one of the supported sets "
                f"{sorted(_HULL_BASE_SETS)}")
        coeffs = tuple(float(c) for c in self.coeffs)
        if len(coeffs) != len(bases):
            raise InvalidParameterError("hull: one coefficient per base required")
        if abs(sum(coeffs) - 1.0) > 1e-9:
            raise InvalidParameterError("hull: coefficients must sum to 1")
        if self.mode == "convex" and any(c < 0 for c in coeffs):
            raise InvalidParameterError("hull: convex coefficients must be >= 0")
        object.__setattr__(self, "bases", bases)
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def name(self):
        return f"hull_{self.mode}"

    def value(self, x):
        x = _as_x(x)
        return sum(c * _base_value(b, None, x) for b, c in zip(self.bases, self.coeffs))

    def d_dx(self, x):
        x = _as_x(x)
        return sum(c * _base_dx(b, None, x) for b, c in zip(self.bases, self.coeffs))

    def d_dparams(self, x):
        x = _as_x(x)
        return {f"c_{i}": _base_value(b, None, x) for i, b in enumerate(self.bases)}

    def param_dict(self):
        return {f"c_{i}": c for i, c in enumerate(self.coeffs)}

    def with_param(self, name, value):
        idx = int(name.split("_", 1)[1])
        coeffs = list(self.coeffs)
        coeffs[idx] = float(value)
        return _raw_replace(self, coeffs=tuple(coeffs))

    def kinks(self):
        ks = set()
        for b in self.bases:
            ks |= set(_base_kinks(b))
        return tuple(sorted(ks))

    def to_json(self):
        return {"variant": "hull", "mode": self.mode,
                "bases": list(self.bases), "coeffs": list(self.coeffs)}


@dataclass(frozen=True)
class APLUnit:
    """ReLU plus a sum of hinge functions a_s * max(0, -x + b_s)."""

    a: tuple = (0.0, 0.0)
    b: tuple = (1.0, -1.0)

    name = "apl"

    def __post_init__(self):
        a = tuple(float(v) for v in self.a)
        b = tuple(float(v) for v in self.b)
        if len(a) != len(b) or len(a) < 1:
            raise InvalidParameterError("apl: need matching nonempty slope/location lists")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    def value(self, x):
        x = _as_x(x)
        out = np.maximum(0.0, x)
        for a_s, b_s in zip(self.a, self.b):
            out = out + a_s * np.maximum(0.0, b_s - x)
        return out

    def d_dx(self, x):
        x = _as_x(x)
        out = np.where(x > 0, 1.0, 0.0)
        for a_s, b_s in zip(self.a, self.b):
            out = out - a_s * (x < b_s)
        return out

    def d_dparams(self, x):
        x = _as_x(x)
        grads = {}
        for s, (a_s, b_s) in enumerate(zip(self.a, self.b)):
            grads[f"a_{s}"] = np.maximum(0.0, b_s - x)
            grads[f"b_{s}"] = a_s * (b_s - x > 0).astype(float)
        return grads

    def param_dict(self):
        out = {f"a_{s}": v for s, v in enumerate(self.a)}
        out.update({f"b_{s}": v for s, v in enumerate(self.b)})
        return out

    def with_param(self, name, value):
        kind, idx = name.split("_", 1)
        idx = int(idx)
        a, b = list(self.a), list(self.b)
        if kind == "a":
            a[idx] = float(value)
        elif kind == "b":
            b[idx] = float(value)
        else:
            raise KeyError(name)
        return _raw_replace(self, a=tuple(a), b=tuple(b))

    def kinks(self):
        return tuple(sorted({0.0} | set(self.b)))

    def to_json(self):
        return {"variant": self.name, "a": list(self.a), "b": list(self.b)}


def hat(x, center, width):
    """Triangular bump max(width - |x - center|, 0); peak value = width."""
    return np.maximum(width - np.abs(_as_x(x) - center), 0.0)


@dataclass(frozen=True)
class MeLUUnit:
    """PReLU plus a sum of hat functions c_j * hat(x; a_j, lambda_j).

    Centers and widths are configuration (the construction rule is not
    pinned down beyond equally spaced centers with a fixed width); only the
    hat coefficients and the PReLU slope are learnable.
    """

    prelu_alpha: float = 0.25
    coeffs: tuple = tuple([0.0] * 9)
    centers: tuple = tuple(float(c) for c in range(-4, 5))
    widths: tuple = tuple([0.5] * 9)

    name = "melu"

    def __post_init__(self):
        c = tuple(float(v) for v in self.coeffs)
        a = tuple(float(v) for v in self.centers)
        w = tuple(float(v) for v in self.widths)
        if not (len(c) == len(a) == len(w)):
            raise InvalidParameterError("melu: coeffs, centers, widths must align")
        if any(v <= 0 for v in w):
            raise InvalidParameterError("melu: hat widths must be > 0")
        object.__setattr__(self, "coeffs", c)
        object.__setattr__(self, "centers", a)
        object.__setattr__(self, "widths", w)

    def value(self, x):
        x = _as_x(x)
        out = np.where(x >= 0, x, self.prelu_alpha * x)
        for c, a, w in zip(self.coeffs, self.centers, self.widths):
            out = out + c * hat(x, a, w)
        return out

    def d_dx(self, x):
        x = _as_x(x)
        out = np.where(x > 0, 1.0, self.prelu_alpha)
        for c, a, w in zip(self.coeffs, self.centers, self.widths):
            inside = np.abs(x - a) < w
            out = out - c * np.sign(x - a) * inside
        return out

    def d_dparams(self, x):
        x = _as_x(x)
        grads = {"prelu_alpha": np.where(x >= 0, 0.0, x)}
        for j, (a, w) in enumerate(zip(self.centers, self.widths)):
            grads[f"c_{j}"] = hat(x, a, w)
        return grads

    def param_dict(self):
        out = {"prelu_alpha": self.prelu_alpha}
        out.update({f"c_{j}": v for j, v in enumerate(self.coeffs)})
        return out

    def with_param(self, name, value):
        if name == "prelu_alpha":
            return _raw_replace(self, prelu_alpha=float(value))
        if name.startswith("c_"):
            j = int(name.split("_", 1)[1])
            coeffs = list(self.coeffs)
            coeffs[j] = float(value)
            return _raw_replace(self, coeffs=tuple(coeffs))
        raise KeyError(name)

    def kinks(self):
        ks = {0.0}
        for a, w in zip(self.centers, self.widths):
            ks |= {a - w, a, a + w}
        return tuple(sorted(ks))

    def to_json(self):
        return {"variant": self.name, "prelu_alpha": self.prelu_alpha,
                "coeffs": list(self.coeffs), "centers": list(self.centers),
                "widths": list(self.widths)}


@dataclass(frozen=True)
class LuTUInterp:
    """Piecewise-linear interpolation through anchors (x0 + s*i, y_i).

    Outside the anchor span the end segment's slope is extended linearly
    (a declared extension; the construction itself leaves this open).
    """

    x0: float = -10.0
    s: float = 1.0
    y: tuple = tuple(float(max(0, v)) for v in range(-10, 11))

    name = "lutu_interp"

    def __post_init__(self):
        y = tuple(float(v) for v in self.y)
        if len(y) < 2:
            raise InvalidParameterError("lutu: at least two anchors required")
        if self.s <= 0:
            raise InvalidParameterError("lutu: anchor step s must be > 0")
        object.__setattr__(self, "y", y)

    def _anchor_x(self):
        return self.x0 + self.s * np.arange(len(self.y))

    def _segment(self, x):
        n_seg = len(self.y) - 1
        i = np.floor((x - self.x0) / self.s).astype(int)
        return np.clip(i, 0, n_seg - 1)

    def value(self, x):
        x = _as_x(x)
        xs = self._anchor_x()
        y = np.asarray(self.y)
        i = self._segment(x)
        return (y[i] * (xs[i + 1] - x) + y[i + 1] * (x - xs[i])) / self.s

    def d_dx(self, x):
        x = _as_x(x)
        y = np.asarray(self.y)
        i = self._segment(x)
        return (y[i + 1] - y[i]) / self.s

    def d_dparams(self, x):
        x = _as_x(x)
        xs = self._anchor_x()
        i = self._segment(x)
        grads = {}
        for j in range(len(self.y)):
            g = np.zeros_like(x)
            g = np.where(i == j, (xs[i + 1] - x) / self.s, g)
            g = np.where(i + 1 == j, (x - xs[i]) / self.s, g)
            grads[f"y_{j}"] = g
        return grads

    def param_dict(self):
        return {f"y_{j}": v for j, v in enumerate(self.y)}

    def with_param(self, name, value):
        j = int(name.split("_", 1)[1])
        y = list(self.y)
        y[j] = float(value)
        return _raw_replace(self, y=tuple(y))

    def kinks(self):
        return tuple(self._anchor_x()[1:-1])

    def to_json(self):
        return {"variant": self.name, "x0": self.x0, "s": self.s, "y": list(self.y)}


def cosine_mask(u, tau):
    """Smoothing bump (1 + cos(pi u / tau)) / (2 tau) on [-tau, tau]; integrates to 1."""
    u = _as_x(u)
    inside = np.abs(u) <= tau
    return np.where(inside, (1.0 + np.cos(np.pi * u / tau)) / (2.0 * tau), 0.0)


def _cosine_mask_du(u, tau):
    u = _as_x(u)
    inside = np.abs(u) <= tau
    return np.where(inside, -np.pi * np.sin(np.pi * u / tau) / (2.0 * tau * tau), 0.0)


@dataclass(frozen=True)
class LuTUCosine:
    """Sum of anchor values spread by a compact cosine bump of half-width t*s."""

    x0: float = -10.0
    s: float = 1.0
    y: tuple = tuple(float(max(0, v)) for v in range(-10, 11))
    t: int = 2

    name = "lutu_cosine"

    def __post_init__(self):
        y = tuple(float(v) for v in self.y)
        if len(y) < 2:
            raise InvalidParameterError("lutu: at least two anchors required")
        if self.s <= 0:
            raise InvalidParameterError("lutu: anchor step s must be > 0")
        if int(self.t) < 1:
            raise InvalidParameterError("lutu: smoothing ratio t must be a positive integer")
        object.__setattr__(self, "y", y)
        object.__setattr__(self, "t", int(self.t))

    @property
    def tau(self):
        return self.t * self.s

    def _anchor_x(self):
        return self.x0 + self.s * np.arange(len(self.y))

    def value(self, x):
        x = _as_x(x)
        out = np.zeros_like(x)
        for xi, yi in zip(self._anchor_x(), self.y):
            out = out + yi * cosine_mask(x - xi, self.tau)
        return out

    def d_dx(self, x):
        x = _as_x(x)
        out = np.zeros_like(x)
        for xi, yi in zip(self._anchor_x(), self.y):
            out = out + yi * _cosine_mask_du(x - xi, self.tau)
        return out

    def d_dparams(self, x):
        x = _as_x(x)
        return {f"y_{j}": cosine_mask(x - xj, self.tau)
                for j, xj in enumerate(self._anchor_x())}

    def param_dict(self):
        return {f"y_{j}": v for j, v in enumerate(self.y)}

    def with_param(self, name, value):
        j = int(name.split("_", 1)[1])
        y = list(self.y)
        y[j] = float(value)
        return _raw_replace(self, y=tuple(y))

    def kinks(self):
        return ()   # the mask is C1 at its support edges

    def to_json(self):
        return {"variant": self.name, "x0": self.x0, "s": self.s,
                "y": list(self.y), "t": self.t}


@dataclass(frozen=True)
class MoGUUnit:
    """Sum of scaled Gaussian bumps lam_i * N(x; mu_i, sigma_i)."""

    lam: tuple = (1.0, 1.0)
    mu: tuple = (-1.0, 1.0)
    sigma: tuple = (1.0, 1.0)

    name = "mogu"

    def __post_init__(self):
        lam = tuple(float(v) for v in self.lam)
        mu = tuple(float(v) for v in self.mu)
        sigma = tuple(float(v) for v in self.sigma)
        if not (len(lam) == len(mu) == len(sigma) >= 1):
            raise InvalidParameterError("mogu: component lists must align and be nonempty")
        if any(s <= 0 for s in sigma):
            raise InvalidParameterError("mogu: component widths sigma must be > 0")
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "mu", mu)
        object.__setattr__(self, "sigma", sigma)

    def _bumps(self, x):
        for lam, mu, sig in zip(self.lam, self.mu, self.sigma):
            z = (x - mu) / sig
            yield lam, mu, sig, z, np.exp(-0.5 * z * z) / math.sqrt(2.0 * math.pi * sig * sig)

    def value(self, x):
        x = _as_x(x)
        return sum(lam * g for lam, _, _, _, g in self._bumps(x))

    def d_dx(self, x):
        x = _as_x(x)
        return sum(-lam * g * z / sig for lam, _, sig, z, g in self._bumps(x))

    def d_dparams(self, x):
        x = _as_x(x)
        grads = {}
        for i, (lam, mu, sig, z, g) in enumerate(self._bumps(x)):
            grads[f"lam_{i}"] = g
            grads[f"mu_{i}"] = lam * g * z / sig
            grads[f"sigma_{i}"] = lam * g * (z * z - 1.0) / sig
        return grads

    def param_dict(self):
        out = {}
        for i, (lam, mu, sig) in enumerate(zip(self.lam, self.mu, self.sigma)):
            out[f"lam_{i}"] = lam
            out[f"mu_{i}"] = mu
            out[f"sigma_{i}"] = sig
        return out

    def with_param(self, name, value):
        kind, idx = name.rsplit("_", 1)
        idx = int(idx)
        lam, mu, sigma = list(self.lam), list(self.mu), list(self.sigma)
        if kind == "lam":
            lam[idx] = float(value)
        elif kind == "mu":
            mu[idx] = float(value)
        elif kind == "sigma":
            sigma[idx] = float(value)
        else:
            raise KeyError(name)
        return _raw_replace(self, lam=tuple(lam), mu=tuple(mu), sigma=tuple(sigma))

    def kinks(self):
        return ()

    def to_json(self):
        return {"variant": self.name, "lam": list(self.lam),
                "mu": list(self.mu), "sigma": list(self.sigma)}


@dataclass(frozen=True)
class BDAAUnit:
    """Average of two shifted logistic curves; the derivative is twin-peaked.

    Variants: 1 = (s(x) + s(x+a))/2, 2 = variant 1 - 1/2,
    3 = (s(x+a) + s(x-a))/2, 4 = variant 3 - 1/2 (odd for every a >= 0).
    """

    variant: int = 1
    a: float = 1.0

    def __post_init__(self):
        if self.variant not in (1, 2, 3, 4):
            raise InvalidParameterError("bdaa: variant must be one of 1..4")
        if self.variant in (3, 4) and self.a < 0:
            raise InvalidParameterError("bdaa: shift a must be >= 0 for variants 3 and 4")

    @property
    def name(self):
        return f"bdaa{self.variant}"

    def _shifts(self):
        if self.variant in (1, 2):
            return 0.0, self.a
        return self.a, -self.a

    def value(self, x):
        x = _as_x(x)
        u, v = self._shifts()
        out = 0.5 * (sigmoid(x + u) + sigmoid(x + v))
        if self.variant in (2, 4):
            out = out - 0.5
        return out

    def d_dx(self, x):
        x = _as_x(x)
        u, v = self._shifts()
        return 0.5 * (sigmoid_prime(x + u) + sigmoid_prime(x + v))

    def d_dparams(self, x):
        x = _as_x(x)
        if self.variant in (1, 2):
            g = 0.5 * sigmoid_prime(x + self.a)
        else:
            g = 0.5 * (sigmoid_prime(x + self.a) - sigmoid_prime(x - self.a))
        return {"a": g}

    def param_dict(self):
        return {"a": self.a}

    def with_param(self, name, value):
        if name != "a":
            raise KeyError(name)
        return _raw_replace(self, a=float(value))

    def kinks(self):
        return ()

    def to_json(self):
        return {"variant": self.name, "a": self.a}


_VARIANTS = {
    "mixed": MixedActivation, "gated": GatedActivation,
    "hierarchical": HierarchicalActivation, "hull": HullCombination,
    "apl": APLUnit, "melu": MeLUUnit, "lutu_interp": LuTUInterp,
    "lutu_cosine": LuTUCosine, "mogu": MoGUUnit,
}


def from_json(obj):
    """Rebuild a composite from its to_json dict."""
    tag = obj["variant"]
    if tag.startswith("bdaa"):
        return BDAAUnit(variant=int(tag[4:]), a=float(obj["a"]))
    if tag in ("hull_affine", "hull_convex"):
        tag, obj = "hull", dict(obj, mode=tag.split("_", 1)[1])
    if tag not in _VARIANTS:
        raise ActivationError(f"unknown composite variant {tag!r}")
    cls = _VARIANTS[tag]
    kwargs = {k: v for k, v in obj.items() if k != "variant"}
    if tag == "mixed" or tag == "gated":
        for side in ("left", "right"):
            if side in kwargs:
                kwargs[side] = (kwargs[side][0], kwargs[side][1])
    if tag == "hierarchical" and "pairs" in kwargs:
        kwargs["pairs"] = tuple(((l[0], l[1]), (r[0], r[1])) for l, r in kwargs["pairs"])
    for key in ("omegas", "coeffs", "bases", "a", "b", "y", "lam", "mu", "sigma",
                "centers", "widths"):
        if key in kwargs and isinstance(kwargs[key], list):
            kwargs[key] = tuple(kwargs[key])
    return cls(**kwargs)


# spec-facing functional wrappers -------------------------------------------

def mixed_eval(rho, x):
    return MixedActivation(rho=rho).value(x)


def gated_eval(omega, x):
    return GatedActivation(omega=omega).value(x)


def hierarchical_eval(spec, x):
    return spec.value(x)


def hull_combine(spec, x):
    return spec.value(x)


def apl_eval(params, x):
    return params.value(x)


def apl_grad(params, x):
    return params.d_dparams(x)


def melu_eval(params, x):
    return params.value(x)


def lutu_eval(params, x):
    return params.value(x)


def lutu_grads(params, x):
    return params.d_dparams(x), params.d_dx(x)


def mogu_eval(params, x):
    return params.value(x)


def bdaa_eval(params, x):
    return params.value(x)


def bdaa_grads(params, x):
    return params.d_dx(x), params.d_dparams(x)["a"]


def default_instances():
    """Representative composite instances for catalog-wide gradient sweeps."""
    rng = np.random.default_rng(20240)
    lut_y = tuple(np.round(rng.uniform(-2.0, 2.0, 21), 6))
    return [
        MixedActivation(rho=0.5),
        GatedActivation(omega=1.0),
        HierarchicalActivation(omegas=(1.0, -0.5)),
        HullCombination(mode="affine", bases=("identity", "relu", "tanh"),
                        coeffs=(0.5, 0.3, 0.2)),
        HullCombination(mode="convex", bases=("identity", "relu"),
                        coeffs=(0.3, 0.7)),
        APLUnit(a=(0.25, -0.15), b=(1.0, -1.0)),
        MeLUUnit(coeffs=(0.2, -0.1, 0.3, 0.0, -0.25, 0.15, 0.1, -0.3, 0.05)),
        LuTUInterp(),
        LuTUCosine(y=lut_y),
        MoGUUnit(),
        BDAAUnit(variant=1, a=1.0),
        BDAAUnit(variant=2, a=-2.0),
        BDAAUnit(variant=3, a=2.0),
        BDAAUnit(variant=4, a=1.5),
    ]


def perturbed_instances():
    """Three parameter perturbations per composite variant, all valid specs."""
    out = []
    for rho in (0.0, 0.25, 1.0):
        out.append(MixedActivation(rho=rho))
    for omega in (-1.0, 0.3, 2.5):
        out.append(GatedActivation(omega=omega))
    for omegas in ((0.5,), (2.0, -2.0), (1.0, 0.5, -0.7)):
        out.append(HierarchicalActivation(omegas=omegas))
    for coeffs in ((1.2, -0.5, 0.3), (0.0, 0.0, 1.0), (-0.4, 0.9, 0.5)):
        out.append(HullCombination(mode="affine", coeffs=coeffs))
    for coeffs in ((1.0, 0.0), (0.5, 0.5), (0.1, 0.9)):
        out.append(HullCombination(mode="convex", bases=("identity", "relu"), coeffs=coeffs))
    for a, b in (((0.4,), (0.5,)), ((-0.2, 0.3), (2.0, 0.5)), ((0.1, 0.2, -0.3), (1.5, 0.0, -2.0))):
        out.append(APLUnit(a=a, b=b))
    for scale in (0.5, -0.8, 1.5):
        out.append(MeLUUnit(coeffs=tuple(scale * c for c in
                                         (0.2, -0.1, 0.3, 0.1, -0.25, 0.15, 0.1, -0.3, 0.05)),
                            prelu_alpha=0.25 * abs(scale)))
    rng = np.random.default_rng(77)
    for _ in range(3):
        y = tuple(np.round(rng.uniform(-3.0, 3.0, 11), 6))
        out.append(LuTUInterp(x0=-5.0, s=1.0, y=y))
        out.append(LuTUCosine(x0=-5.0, s=1.0, y=y, t=2))
    for lam, mu, sigma in (((2.0,), (0.0,), (0.7,)),
                           ((1.0, -0.5), (-2.0, 2.0), (0.5, 1.5)),
                           ((0.3, 0.3, 0.3), (-1.0, 0.0, 1.0), (0.4, 0.6, 0.8))):
        out.append(MoGUUnit(lam=lam, mu=mu, sigma=sigma))
    for variant, a in ((1, 4.0), (2, 1.5), (3, 0.5), (4, 3.0), (1, -2.0), (3, 6.0)):
        out.append(BDAAUnit(variant=variant, a=a))
    return out
