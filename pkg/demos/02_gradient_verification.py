"""How the gradient certification works: the finite-difference oracle, the
per-kind sweep, and what a planted derivative bug looks like when caught."""

import numpy as np

from actlab import catalog, gradients

# ----------------------------------------------------------------------------
# the oracle is an independent central difference of the forward value
x = 0.8
analytic = gradients.grad("mish", x).d_dx
numeric = gradients.fd_oracle("mish", x, h=1e-6)
print(f"mish'({x}) analytic {analytic:.12f} vs oracle {numeric:.12f}")

# learnable-parameter partials ride along in the same bundle
g = gradients.grad("prelu", -2.0, {"alpha": 0.2})
print(f"prelu(-2): value={g.value}, d/dx={g.d_dx}, d/dalpha={g.d_dparam['alpha']}")

# ----------------------------------------------------------------------------
# a sweep compares the analytic forms against the oracle at a thousand
# quasi-random points, skipping small guard bands around declared kinks
report = gradients.grad_check("s_shaped_relu")
print(f"\ns_shaped_relu: pass={report.passed} max_rel_err={report.max_rel_err:.2e} "
      f"samples={report.samples} excluded_kinks={report.excluded_kinks}")
for target, err in sorted(report.target_errors.items()):
    print(f"   {target:6s} max rel err {err:.2e}")

# ----------------------------------------------------------------------------
# the whole catalog, including three perturbed parameter sets per kind
worst = ("", 0.0)
for kind in catalog.kind_names():
    for params in gradients.param_sets_for(kind):
        r = gradients.grad_check(kind, params)
        assert r.passed, (kind, params)
        if r.max_rel_err > worst[1]:
            worst = (kind, r.max_rel_err)
print(f"\nall kinds certified; worst max_rel_err {worst[1]:.2e} ({worst[0]})")

# ----------------------------------------------------------------------------
# what a bug looks like: a hand-rolled "swish derivative" that forgets the
# product rule fails loudly against the oracle
def broken_swish_dx(x, beta=1.0):
    s = 1.0 / (1.0 + np.exp(-beta * x))
    return s            # missing the x * beta * s * (1 - s) term

xs = gradients.quasi_random(1000, -5, 5)
fd = gradients.central_difference(lambda t: catalog.evaluate("swish", t), xs)
err = gradients.scale_guarded_rel_err(broken_swish_dx(xs), fd)
print(f"\nplanted bug: max rel err {err.max():.3f} (tolerance is 1e-5)")
