"""Catalog of scalar activation functions.

Public surface: `kind_names` / `canonical_name` for discovery, `evaluate`
for forward values, `default_params` / `validate_params` for parameter
handling and `descriptor` for static metadata (range, monotonicity,
smoothness, kink locations).
"""

import math
from dataclasses import dataclass

import numpy as np

from ..context import EvalContext
from ..errors import (InvalidParameterError, NonFiniteInputError,
                      UnknownKindError)
from . import elu_family, misc_family, relu_family, sigmoid_family  # noqa: F401 (registration)
from .misc_family import mish_derivative_rational
from .registry import (Kind, ParamSpec, Range, canonical_name,
                       check_finite_input, get, kind_names, resolve_params)

__all__ = [
    "ActivationDescriptor", "Range", "canonical_name", "default_params",
    "descriptor", "evaluate", "kind_names", "validate_params",
    "mish_derivative_rational", "is_stochastic", "learnable_params",
]


def default_params(kind):
    """Default parameter set for `kind`; satisfies all of its invariants."""
    return get(kind).defaults()


def validate_params(kind, params=None):
    """Resolve `params` over the defaults, raising InvalidParameterError on
    any violated invariant."""
    return resolve_params(get(kind), params)


def is_stochastic(kind):
    return get(kind).stochastic


def learnable_params(kind, params=None):
    info = get(kind)
    return info.learnable_for(resolve_params(info, params))


def effective_params(kind, params=None, ctx=None):
    """Validated params with stochastic coefficients filled in.

    Train mode draws fresh coefficients from the context's rng (one draw per
    call); eval mode substitutes the deterministic expectation values.
    """
    info = get(kind)
    p = resolve_params(info, params)
    if info.stochastic:
        from .. import stochastic
        if ctx is not None and ctx.training:
            p.update(stochastic.sample_coefficients(info.name, p, ctx.rng))
        else:
            p = stochastic.eval_mode_params(info.name, p)
    return p


def evaluate(kind, x, params=None, ctx=None):
    """Forward value of `kind` at `x` (scalar or array).

    Deterministic for non-stochastic kinds; stochastic kinds draw from
    `ctx` in train mode and use expectation substitutes otherwise.
    """
    info = get(kind)
    arr = check_finite_input(x)
    p = effective_params(kind, params, ctx)
    out = info.value(arr, p)
    if np.ndim(x) == 0 and np.ndim(out) == 0:
        return float(out)
    return np.asarray(out, dtype=float)


@dataclass(frozen=True)
class ActivationDescriptor:
    """Static metadata for one activation kind at a given parameter set."""

    name: str
    group: str
    family: str
    output_range: Range
    monotonic: bool
    smooth: bool                # continuously differentiable: no kinks
    bounded: bool
    stochastic: bool
    has_learnable_params: bool
    kinks: tuple                # points of non-differentiability
    limits: tuple               # (limit at -inf, limit at +inf); None if infinite


def descriptor(kind, params=None):
    info = get(kind)
    p = resolve_params(info, params)
    if info.stochastic:
        from .. import stochastic
        p = stochastic.eval_mode_params(info.name, p)
    kinks = tuple(float(k) for k in info.kinks(p))
    rng = info.range_fn(p)
    rng = Range(float(rng.lo), float(rng.hi), rng.lo_closed, rng.hi_closed)
    limits = info.limits(p) if info.limits is not None else (None, None)
    limits = tuple(None if v is None else float(v) for v in limits)
    return ActivationDescriptor(
        name=info.name,
        group=info.group,
        family=info.family,
        output_range=rng,
        monotonic=info.monotonic,
        smooth=not kinks,
        bounded=math.isfinite(rng.lo) and math.isfinite(rng.hi),
        stochastic=info.stochastic,
        has_learnable_params=bool(info.learnable_for(p)),
        kinks=kinks,
        limits=limits,
    )
