"""The disk classification benchmark: label points by radius, train a small
sigmoid-decoded net, and draw the learned decision regions."""

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from actlab import experiments as ex

cfg = ex.ClassificationConfig(seed=42)
X, y = ex.gen_disk_data(cfg)
print(f"dataset: {X.shape[0]} points in the unit disk, "
      f"{int(y.sum())} inside radius {cfg.inner_radius}")

fig, axes = plt.subplots(1, 4, figsize=(16, 4))
axes[0].scatter(X[:, 0], X[:, 1], c=y.ravel(), s=6, cmap="coolwarm")
axes[0].set_title("training data")
axes[0].set_aspect("equal")

for ax, kind in zip(axes[1:], ["relu", "tanh", "swish"]):
    res = ex.run_classification(kind, cfg=cfg)
    tp, fp, fn, tn = res.confusion
    acc = res.metrics.val_accuracy[-1]
    print(f"{kind:6s} val accuracy {acc:.3f}  confusion tp={tp} fp={fp} "
          f"fn={fn} tn={tn}  class-1 area fraction {res.disk_class1_fraction:.3f}")
    b = res.boundary
    n = cfg.boundary_resolution
    ax.imshow(b[:, 2].reshape(n, n), origin="lower", extent=(-1, 1, -1, 1),
              cmap="coolwarm", alpha=0.6)
    circle = plt.Circle((0, 0), 0.5, fill=False, color="k", ls="--", lw=1)
    ax.add_patch(circle)
    ax.set_title(f"{kind} decision regions")
    ax.set_aspect("equal")

fig.tight_layout()
fig.savefig("demo_classification.png", dpi=120)
print("wrote demo_classification.png")
