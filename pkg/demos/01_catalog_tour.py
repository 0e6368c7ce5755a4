"""Tour of the activation catalog: evaluating kinds, reading their metadata,
and plotting a gallery of curves with their derivatives."""

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from actlab import catalog, gradients

# ----------------------------------------------------------------------------
# every kind is addressed by a stable snake-case name
print(f"catalog holds {len(catalog.kind_names())} kinds")
print(catalog.kind_names()[:10], "...")

# scalar evaluation with default parameters
for kind in ["logistic", "tanh", "relu", "selu", "mish", "gelu_erf"]:
    print(f"{kind:10s} f(1.0) = {catalog.evaluate(kind, 1.0): .6f}")

# parameters are plain dicts; invalid settings raise with the violated rule
print("\nleaky_relu, steeper leak:",
      catalog.evaluate("leaky_relu", -2.0, {"alpha": 0.1}))

# ----------------------------------------------------------------------------
# descriptors collect the declared properties: range, monotonicity,
# smoothness, kink locations
for kind in ["relu", "swish", "hard_tanh", "srs", "mtlu"]:
    d = catalog.descriptor(kind)
    print(f"{kind:10s} range=({d.output_range.lo:g}, {d.output_range.hi:g}) "
          f"monotonic={d.monotonic} smooth={d.smooth} kinks={d.kinks}")

# ----------------------------------------------------------------------------
# a small gallery: values on top, input derivatives below
gallery = ["logistic", "tanh", "relu", "elu", "silu", "mish",
           "gelu_erf", "hard_swish_piecewise", "bif"]
xs = np.linspace(-4, 4, 801)

fig, axes = plt.subplots(2, 1, figsize=(9, 8), sharex=True)
for kind in gallery:
    axes[0].plot(xs, catalog.evaluate(kind, xs), label=kind, lw=1.2)
    axes[1].plot(xs, gradients.grad(kind, xs).d_dx, lw=1.2)
axes[0].set_ylabel("f(x)")
axes[0].set_ylim(-2, 4)
axes[0].legend(ncol=3, fontsize=8)
axes[1].set_ylabel("f'(x)")
axes[1].set_xlabel("x")
axes[1].set_ylim(-1.5, 2)
for ax in axes:
    ax.grid(alpha=0.3)
fig.tight_layout()
fig.savefig("demo_catalog_gallery.png", dpi=120)
print("\nwrote demo_catalog_gallery.png")
