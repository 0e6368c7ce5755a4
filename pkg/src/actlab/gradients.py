"""Analytic derivatives, the finite-difference oracle, and the check harness.

Every catalog kind exposes d/dx and per-learnable-parameter partials; this
module certifies them against central differences over quasi-random point
sets, excluding guard bands around declared kinks.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from . import catalog
from .catalog import registry
from .errors import KinkError

GOLDEN_FRAC = (math.sqrt(5.0) - 1.0) / 2.0

KINK_SNAP = 1e-9          # strict-mode rejection radius around a kink
DEFAULT_H = 1e-6
DEFAULT_GUARD = 1e-3


def quasi_random(n, lo, hi, offset=0.5):
    """Deterministic low-discrepancy points in [lo, hi] (golden-ratio lattice)."""
    i = np.arange(n, dtype=float)
    u = np.mod(offset + i * GOLDEN_FRAC, 1.0)
    return lo + (hi - lo) * u


@dataclass(frozen=True)
class GradBundle:
    """Value together with the input derivative and learnable-parameter partials."""

    value: float
    d_dx: float
    d_dparam: dict


def _blend_at_kinks(x, d, kinks, dx_fn, subgradient):
    """Replace derivative entries sitting exactly on a kink with the blend
    (1 - c) * left + c * right of the one-sided derivatives."""
    for k in kinks:
        hit = x == k
        if np.any(hit):
            step = 1e-12 * max(1.0, abs(k))
            left = float(dx_fn(np.asarray(k - step)))
            right = float(dx_fn(np.asarray(k + step)))
            blended = (1.0 - subgradient) * left + subgradient * right
            d = np.where(hit, blended, d)
    return d


def grad(kind, x, params=None, ctx=None, subgradient=0.0, strict=False):
    """Value, d/dx, and learnable-parameter partials of `kind` at `x`.

    At a kink the returned d/dx is the subgradient convention
    (1 - c) * left + c * right; c defaults to 0, favoring the sparse side.
    Strict mode raises instead when x lies within 1e-9 of a kink.
    """
    if not 0.0 <= subgradient <= 1.0:
        raise ValueError("subgradient convention must lie in [0, 1]")
    info = registry.get(kind)
    arr = registry.check_finite_input(x)
    p = catalog.effective_params(kind, params, ctx)
    kinks = tuple(float(k) for k in info.kinks(p))
    if strict and kinks:
        if any(np.any(np.abs(arr - k) <= KINK_SNAP) for k in kinks):
            raise KinkError(f"{info.name}: input within {KINK_SNAP} of a kink")
    value = info.value(arr, p)
    d = np.asarray(info.dx(arr, p), dtype=float)
    if kinks:
        d = _blend_at_kinks(arr, d, kinks, lambda t: info.dx(t, p), subgradient)
    names = info.learnable_for(p)
    dparam = info.dparam(arr, p) if (names and info.dparam is not None) else {}
    dparam = {n: dparam[n] for n in names}
    if np.ndim(x) == 0:
        return GradBundle(float(value), float(d),
                          {n: float(v) for n, v in dparam.items()})
    return GradBundle(np.asarray(value, dtype=float), d,
                      {n: np.asarray(v, dtype=float) for n, v in dparam.items()})


def fd_oracle(kind, x, params=None, ctx=None, h=DEFAULT_H):
    """Second-order central-difference estimate of d/dx at `x`.

    Requires h in [1e-8, 1e-3] and x at least 10h away from every kink.
    Stochastic coefficients are frozen once so both sides see one function.
    """
    if not 1e-8 <= h <= 1e-3:
        raise ValueError("fd step h must lie in [1e-8, 1e-3]")
    info = registry.get(kind)
    p = catalog.effective_params(kind, params, ctx)
    xs = float(x)
    for k in info.kinks(p):
        if abs(xs - float(k)) <= 10.0 * h:
            raise KinkError(f"{info.name}: fd point within 10h of kink at {float(k)}")
    lo = info.value(np.asarray(xs - h), p)
    hi = info.value(np.asarray(xs + h), p)
    return float((hi - lo) / (2.0 * h))


def central_difference(fn, x, h=DEFAULT_H):
    """(fn(x + h) - fn(x - h)) / 2h, vectorized over x."""
    return (np.asarray(fn(x + h), dtype=float)
            - np.asarray(fn(x - h), dtype=float)) / (2.0 * h)


def scale_guarded_rel_err(a, b):
    """|a - b| / max(1, |a|, |b|): relative where large, absolute near zero."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    scale = np.maximum(1.0, np.maximum(np.abs(a), np.abs(b)))
    return np.abs(a - b) / scale


@dataclass(frozen=True)
class GradCheckReport:
    """Outcome of one analytic-vs-finite-difference comparison sweep."""

    kind: str
    samples: int                 # points actually compared (after exclusions)
    max_rel_err: float
    worst_x: float
    worst_target: str            # "d_dx" or a parameter name
    tol: float
    passed: bool
    excluded_kinks: tuple = ()
    target_errors: dict = field(default_factory=dict)   # target -> max rel err


def sample_points(domain, n, kinks=(), guard=DEFAULT_GUARD, winner_fn=None):
    """Quasi-random check points with kink guard bands removed.

    `winner_fn(x) -> index array` additionally drops points where the winning
    branch of a max-type function flips inside the guard window (emergent
    kinks with no closed-form location).
    """
    lo, hi = float(domain[0]), float(domain[1])
    if not (math.isfinite(lo) and math.isfinite(hi) and lo < hi):
        raise ValueError("domain must be a finite nonempty interval")
    if n < 100:
        raise ValueError("need at least 100 samples")
    x = quasi_random(n, lo, hi)
    keep = np.ones(n, dtype=bool)
    for k in kinks:
        keep &= np.abs(x - float(k)) > guard
    if winner_fn is not None:
        keep &= np.asarray(winner_fn(x - guard)) == np.asarray(winner_fn(x + guard))
    return x[keep]


def report_from_errors(name, x, errors, tol, kinks=()):
    """Fold per-target error arrays into a GradCheckReport."""
    max_err, worst_x, worst_target = 0.0, math.nan, "d_dx"
    summary = {}
    for tname, e in errors.items():
        e = np.asarray(e, dtype=float)
        summary[tname] = float(e.max()) if e.size else 0.0
        if e.size and summary[tname] >= max_err:
            max_err = summary[tname]
            worst_x = float(x[int(e.argmax())])
            worst_target = tname
    return GradCheckReport(
        kind=name, samples=int(x.size), max_rel_err=max_err, worst_x=worst_x,
        worst_target=worst_target, tol=tol, passed=bool(max_err <= tol),
        excluded_kinks=tuple(float(k) for k in kinks), target_errors=summary,
    )


def grad_check(kind, params=None, domain=(-5.0, 5.0), n=1000, tol=1e-5,
               guard=DEFAULT_GUARD, h=DEFAULT_H):
    """Certify the analytic d/dx and parameter partials of one catalog kind.

    Stochastic kinds are checked on their eval-mode (deterministic) form.
    Failures are reported in the GradCheckReport, never raised.
    """
    info = registry.get(kind)
    p = catalog.effective_params(kind, params, ctx=None)
    kinks = info.kinks(p)
    x = sample_points(domain, n, kinks, guard)

    value = lambda t: info.value(t, p)
    errors = {"d_dx": scale_guarded_rel_err(info.dx(x, p), central_difference(value, x, h))}
    for pname in info.learnable_for(p):
        base = p[pname]
        fd = (np.asarray(info.value(x, dict(p, **{pname: base + h})), dtype=float)
              - np.asarray(info.value(x, dict(p, **{pname: base - h})), dtype=float)
              ) / (2.0 * h)
        errors[pname] = scale_guarded_rel_err(info.dparam(x, p)[pname], fd)
    return report_from_errors(info.name, x, errors, tol, kinks)


# three alternative valid parameter sets per parametrized kind, used by the
# catalog-wide certification sweep alongside the defaults
PERTURBED_PARAM_SETS = {
    "stanh": [{"b": 1.0, "a": 1.0}, {"b": 2.0, "a": 0.5}, {"b": 0.8, "a": 1.5}],
    "psf": [{"m": 0.5}, {"m": 5.0}, {"m": 50.0}],
    "ptanh": [{"a": 0.1}, {"a": 0.5}, {"a": 0.9}],
    "hexpo": [{"a": 2.0, "b": 1.0, "c": 1.0, "d": 1.0},
              {"a": 1.0, "b": 2.0, "c": 0.5, "d": 1.0},
              {"a": 0.5, "b": 0.7, "c": 2.0, "d": 1.3}],
    "srs": [{"alpha": 1.5, "beta": 2.0}, {"alpha": 3.0, "beta": 4.0},
            {"alpha": 4.0, "beta": 1.0}],
    "leaky_relu": [{"alpha": 0.05}, {"alpha": 0.1}, {"alpha": 0.3}],
    "prelu": [{"alpha": 0.1}, {"alpha": 0.5}, {"alpha": 0.9}],
    "rrelu": [{"l": 0.1, "u": 0.3}, {"l": 0.0, "u": 0.5}, {"l": 0.2, "u": 0.25}],
    "ptelu": [{"alpha": 0.5, "beta": 1.0}, {"alpha": 2.0, "beta": 0.5},
              {"alpha": 1.0, "beta": 2.0}],
    "frelu": [{"b": 0.5}, {"b": -2.0}, {"b": 1.0}],
    "rtrelu": [{"sigma": 0.25}, {"sigma": 1.0}, {"sigma": 2.0}],
    "rtprelu": [{"k": 0.1, "sigma": 0.25}, {"k": 0.5, "sigma": 1.0},
                {"k": 0.8, "sigma": 0.5}],
    "drelu": [{"delta": 0.1}, {"delta": 1.0}, {"delta": 2.0}],
    "sign_relu": [{"a": 0.5}, {"a": 2.0}, {"a": 4.0}],
    "blu": [{"beta": -0.8}, {"beta": 0.2}, {"beta": 1.0}],
    "s_shaped_relu": [{"r": 1.0, "a": 2.0, "l": -1.0, "b": 0.5},
                      {"r": 0.2, "a": 0.5, "l": -0.8, "b": 1.5},
                      {"r": 0.0, "a": 1.0, "l": 0.0, "b": 0.0}],
    "erelu": [{"alpha": 0.2}, {"alpha": 0.7}, {"alpha": 0.9}],
    "eprelu": [{"a": 0.1, "alpha": 0.3}, {"a": 0.4, "alpha": 0.6},
               {"a": 0.25, "alpha": 0.9}],
    "lisa": [{"alpha1": 0.2, "alpha2": 0.8}, {"alpha1": 1.5, "alpha2": 0.1},
             {"alpha1": 0.7, "alpha2": 0.0}],
    "alisa": [{"alpha1": 0.2, "alpha2": 0.8}, {"alpha1": 1.5, "alpha2": 0.1},
              {"alpha1": 0.7, "alpha2": 0.0}],
    "brelu": [{"a": 0.5}, {"a": 2.0}, {"a": 6.0}],
    "blrelu": [{"a": 0.5}, {"a": 2.0}, {"a": 4.0}],
    "bif": [{"a": 0.5}, {"a": 2.0}, {"a": 0.1}],
    "bbif": [{"a": 0.5, "b": 2.0}, {"a": 1.0, "b": 3.0}, {"a": 2.0, "b": 0.5}],
    "reltanh": [{"lambda_pos": 0.5, "lambda_neg": -0.5},
                {"lambda_pos": 1.5, "lambda_neg": -0.8},
                {"lambda_pos": 0.3, "lambda_neg": -1.8}],
    "plu": [{"alpha": 0.2, "c": 0.5}, {"alpha": 0.05, "c": 2.0},
            {"alpha": 0.5, "c": 1.5}],
    "nlrelu": [{"beta": 0.5}, {"beta": 2.0}, {"beta": 5.0}],
    "mtlu": [
        {"c_0": -1.0, "c_1": 0.0, "c_2": 1.0,
         "a_0": 0.1, "a_1": 0.3, "a_2": 0.7, "a_3": 1.2,
         "b_0": 0.05, "b_1": 0.0, "b_2": -0.1, "b_3": 0.2},
        {"c_0": -0.5, "c_1": 0.5,
         "a_0": 0.0, "a_1": 1.0, "a_2": 0.5, "b_0": -0.2, "b_1": 0.0, "b_2": 0.3},
        {"c_0": -0.5, "c_1": 0.0, "c_2": 0.5,
         "a_0": 1.0, "a_1": 1.0, "a_2": 1.0, "a_3": 1.0,
         "b_0": 0.0, "b_1": 0.0, "b_2": 0.0, "b_3": 0.0}],
    "elu": [{"alpha": 0.5}, {"alpha": 2.0}, {"alpha": 3.0}],
    "selu": [{"lambda": 1.0, "alpha": 1.0}, {"lambda": 1.2, "alpha": 2.0},
             {"lambda": 1.0507, "alpha": 1.0}],
    "pelu": [{"a": 2.0, "b": 1.0}, {"a": 1.0, "b": 2.0}, {"a": 0.5, "b": 0.7}],
    "celu": [{"alpha": 0.125}, {"alpha": 2.0}, {"alpha": 8.0}],
    "mpelu": [{"alpha": 0.0, "beta": 1.0}, {"alpha": 25.6, "beta": 0.01},
              {"alpha": 2.0, "beta": 1.0}],
    "preu": [{"alpha": 0.5, "beta": 1.0}, {"alpha": 2.0, "beta": 0.5},
             {"alpha": 1.0, "beta": 2.0}],
    "felu": [{"alpha": 0.1}, {"alpha": 0.5}, {"alpha": 1.5}],
    "eelu": [{"alpha": 0.5, "beta": 1.0, "eps": 0.3},
             {"alpha": 2.0, "beta": 0.5, "eps": 1.0},
             {"alpha": 1.0, "beta": 2.0, "eps": 0.1}],
    "pdelu": [{"alpha": 1.0, "t": 0.7}, {"alpha": 1.0, "t": 1.5},
              {"alpha": 2.0, "t": 0.5}],
    "swish": [{"beta": 0.1}, {"beta": 2.0}, {"beta": 10.0}],
    "eswish": [{"beta": 1.0}, {"beta": 1.5}, {"beta": 2.0}],
    "hard_swish_beta": [{"beta": 0.5}, {"beta": 1.5}, {"beta": 3.0}],
    "sgelu": [{"alpha": 0.1}, {"alpha": 1.0}, {"alpha": 3.0}],
}


def param_sets_for(kind):
    """Default params plus the perturbation table entries (if any)."""
    info = registry.get(kind)
    return [None] + PERTURBED_PARAM_SETS.get(info.name, [])


def check_composite(obj, domain=(-5.0, 5.0), n=1000, tol=1e-5,
                    guard=DEFAULT_GUARD, h=DEFAULT_H):
    """Gradient-check a composite activation instance.

    The object provides value / d_dx / d_dparams / param_dict / with_param /
    kinks and optionally winner (for max-type combiners whose crossing points
    have no closed form).
    """
    winner = getattr(obj, "winner", None)
    x = sample_points(domain, n, obj.kinks(), guard, winner_fn=winner)
    errors = {"d_dx": scale_guarded_rel_err(obj.d_dx(x), central_difference(obj.value, x, h))}
    analytic = obj.d_dparams(x)
    for pname, base in obj.param_dict().items():
        fd = (obj.with_param(pname, base + h).value(x)
              - obj.with_param(pname, base - h).value(x)) / (2.0 * h)
        errors[pname] = scale_guarded_rel_err(analytic[pname], fd)
    return report_from_errors(obj.name, x, errors, tol, obj.kinks())
