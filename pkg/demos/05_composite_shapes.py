"""Gallery of the composite activations: blends, gates, hinge and hat sums,
look-up-table units, Gaussian mixtures, and twin-peak sigmoid pairs."""

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from actlab import composite, gradients

xs = np.linspace(-6, 6, 1201)
rng = np.random.default_rng(1)

fig, axes = plt.subplots(3, 3, figsize=(12, 9))

# fixed vs gated blends of a leaky rectifier and an exponential unit
ax = axes[0, 0]
for rho in (0.0, 0.5, 1.0):
    ax.plot(xs, composite.mixed_eval(rho, xs), label=f"rho={rho}")
ax.set_title("mixed blend")

ax = axes[0, 1]
for omega in (-2.0, 0.0, 2.0):
    ax.plot(xs, composite.gated_eval(omega, xs), label=f"omega={omega}")
ax.set_title("gated blend")

ax = axes[0, 2]
h = composite.HierarchicalActivation(omegas=(2.0, -2.0))
ax.plot(xs, h.value(xs), label="max of 2 gated nodes")
ax.set_title("hierarchical (winner-take-all)")

# hinge sums and hat sums
ax = axes[1, 0]
apl = composite.APLUnit(a=(0.4, -0.3), b=(1.0, -1.5))
ax.plot(xs, apl.value(xs))
ax.set_title("piecewise-linear hinge sum")

ax = axes[1, 1]
melu = composite.MeLUUnit(coeffs=tuple(rng.uniform(-0.6, 0.6, 9)))
ax.plot(xs, melu.value(xs))
ax.set_title("prelu + hat functions")

ax = axes[1, 2]
hull = composite.HullCombination(mode="affine", coeffs=(0.6, 0.9, -0.5))
ax.plot(xs, hull.value(xs))
ax.set_title("affine hull of {id, relu, tanh}")

# look-up tables, gaussian mixtures, shifted-sigmoid pairs
ax = axes[2, 0]
y = tuple(rng.uniform(-2, 2, 21))
ax.plot(xs, composite.LuTUInterp(y=y).value(xs), label="interp")
ax.plot(xs, composite.LuTUCosine(y=y, t=2).value(xs), label="cosine")
ax.set_title("look-up table unit")

ax = axes[2, 1]
mogu = composite.MoGUUnit(lam=(1.2, -0.7), mu=(-1.5, 1.0), sigma=(0.7, 1.1))
ax.plot(xs, mogu.value(xs))
ax.set_title("gaussian mixture")

ax = axes[2, 2]
for a in (0.0, 4.0, 8.0):
    unit = composite.BDAAUnit(variant=3, a=a)
    ax.plot(xs * 3, unit.d_dx(xs * 3), label=f"a={a}")
ax.set_title("twin-peak derivative (variant 3)")

for ax in axes.ravel():
    ax.grid(alpha=0.3)
    if ax.get_legend_handles_labels()[0]:
        ax.legend(fontsize=8)
fig.tight_layout()
fig.savefig("demo_composites.png", dpi=120)
print("wrote demo_composites.png")

# every composite passes the same oracle check as the scalar catalog
for obj in composite.default_instances():
    r = gradients.check_composite(obj)
    print(f"{obj.name:14s} grad check pass={r.passed} max_rel_err={r.max_rel_err:.2e}")
