"""Stochastic activations: seeded draws while training, deterministic
expectation substitutes at eval time, and the negative-slope probability
table for clamped Gaussian slope draws."""

import numpy as np

from actlab import catalog, stochastic
from actlab.context import EvalContext

# ----------------------------------------------------------------------------
# train mode consumes the context's stream; eval mode never touches it
ctx = EvalContext.train(seed=7)
x = -2.0
print("rrelu train-mode draws at x=-2:")
for _ in range(4):
    print(f"   {catalog.evaluate('rrelu', x, ctx=ctx): .6f}")
print(f"rrelu eval mode (slope = (l+u)/2): {catalog.evaluate('rrelu', x): .6f}")

# the substitutions per kind
for kind in ("rrelu", "rtrelu", "erelu", "eelu"):
    p = stochastic.eval_mode_params(kind, catalog.default_params(kind))
    print(f"{kind:7s} eval-mode params: {p}")

# ----------------------------------------------------------------------------
# same seed, same stream: replaying a context reproduces every coefficient
a = EvalContext.train(123)
b = EvalContext.train(123)
da = stochastic.sample_coefficients("eelu", catalog.default_params("eelu"), a.rng, 5)
db = stochastic.sample_coefficients("eelu", catalog.default_params("eelu"), b.rng, 5)
print("\nreplayed eelu slopes equal:", np.array_equal(da["k"], db["k"]), da["k"])

# ----------------------------------------------------------------------------
# clamped slope draws k = clip(N(1, sigma), 0, 2): the chance the raw draw
# lands negative grows with sigma
rng = np.random.default_rng(0)
print("\nsigma   analytic P(<0)   monte carlo (1e6)")
for sigma in (0.3, 0.5, 0.7, 1.0):
    analytic = stochastic.neg_prob(sigma)
    mc = np.mean(rng.normal(1.0, sigma, size=1_000_000) < 0)
    print(f"{sigma:.1f}     {analytic:9.4%}       {mc:9.4%}")
