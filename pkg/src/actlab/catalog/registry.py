"""Registry of scalar activation kinds and their metadata.

Each kind registers a vectorized value function, its input derivative, the
derivatives with respect to learnable parameters, kink locations, output
range and saturation limits.  Kind names are stable lowercase snake-case
strings used by the CLI and JSON configs.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from ..errors import InvalidParameterError, NonFiniteInputError, UnknownKindError

GROUP_SIGMOID = "sigmoid"
GROUP_RELU = "relu"
GROUP_ELU = "elu"
GROUP_MISC = "misc"

FAMILY_FIXED = "fixed"
FAMILY_PARAMETRIC = "parametric"
FAMILY_ADAPTIVE = "adaptive"
FAMILY_STOCHASTIC = "stochastic"

INF = math.inf


@dataclass(frozen=True)
class ParamSpec:
    """One named scalar parameter of a kind.

    learnable: trained by gradient descent (appears in d_dparam).
    sampled:   drawn from the rng per batch/call while training; never trained.
    """

    default: float
    learnable: bool = False
    sampled: bool = False


@dataclass(frozen=True)
class Range:
    lo: float
    hi: float
    lo_closed: bool = True
    hi_closed: bool = True

    def __contains__(self, v):
        ok_lo = v >= self.lo if self.lo_closed else v > self.lo
        ok_hi = v <= self.hi if self.hi_closed else v < self.hi
        return bool(ok_lo and ok_hi)


def _no_kinks(p):
    return ()


def _unbounded(p):
    return Range(-INF, INF, False, False)


@dataclass(frozen=True)
class Kind:
    """Internal registry record; the public surface lives in catalog.__init__."""

    name: str
    group: str
    family: str
    params: dict            # name -> ParamSpec, insertion-ordered
    value: callable         # (x, p) -> array
    dx: callable            # (x, p) -> array; at kinks returns the left limit
    dparam: callable = None  # (x, p) -> {name: array}, learnable params only
    kinks: callable = _no_kinks       # p -> tuple of x locations
    range_fn: callable = _unbounded   # p -> Range
    limits: callable = None           # p -> (lim at -inf | None, lim at +inf | None)
    monotonic: bool = False           # non-decreasing at default params
    validate: callable = None         # p -> None, raises InvalidParameterError
    resolve: callable = None          # custom user-params -> full dict (variable layouts)
    learnables_of: callable = None    # p -> learnable names, when layout-dependent
    aliases: tuple = ()

    @property
    def stochastic(self):
        return any(s.sampled for s in self.params.values())

    @property
    def learnable_names(self):
        return tuple(n for n, s in self.params.items() if s.learnable)

    @property
    def sampled_names(self):
        return tuple(n for n, s in self.params.items() if s.sampled)

    def defaults(self):
        return {n: s.default for n, s in self.params.items()}

    def learnable_for(self, p):
        if self.learnables_of is not None:
            return tuple(self.learnables_of(p))
        return self.learnable_names


_REGISTRY = {}
_ALIASES = {}


def register(kind):
    if kind.name in _REGISTRY or kind.name in _ALIASES:
        raise ValueError(f"duplicate kind name {kind.name!r}")
    _REGISTRY[kind.name] = kind
    for alias in kind.aliases:
        if alias in _REGISTRY or alias in _ALIASES:
            raise ValueError(f"duplicate alias {alias!r}")
        _ALIASES[alias] = kind.name
    return kind


def canonical_name(name):
    name = str(name).strip().lower()
    if name in _REGISTRY:
        return name
    if name in _ALIASES:
        return _ALIASES[name]
    raise UnknownKindError(name)


def get(name):
    return _REGISTRY[canonical_name(name)]


def kind_names():
    """Canonical kind names in sorted order."""
    return sorted(_REGISTRY)


def resolve_params(kind, params=None):
    """Defaults overlaid with `params`, validated against the kind's invariants.

    Values may be scalars or arrays (arrays arise for per-unit sampled
    coefficients inside the network harness); validation runs elementwise.
    """
    info = get(kind) if isinstance(kind, str) else kind
    if info.resolve is not None:
        out = info.resolve(dict(params) if params else None)
        if info.validate is not None:
            info.validate(out)
        return out
    out = info.defaults()
    if params:
        for name, value in params.items():
            if name not in out:
                raise InvalidParameterError(
                    f"{info.name}: unknown parameter {name!r} "
                    f"(expected one of {sorted(out)})"
                )
            arr = np.asarray(value, dtype=float)
            if not np.all(np.isfinite(arr)):
                raise InvalidParameterError(f"{info.name}: parameter {name!r} is not finite")
            out[name] = float(arr) if arr.ndim == 0 else arr
    if info.validate is not None:
        info.validate(out)
    return out


def check_finite_input(x):
    arr = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise NonFiniteInputError("activation input must be finite")
    return arr


def require(cond, message):
    """Elementwise-friendly invariant check for validators."""
    if not np.all(cond):
        raise InvalidParameterError(message)
