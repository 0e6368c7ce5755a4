"""Vector-input activations: the softmax walkthrough, its Jacobian, and
maxout units as learnable piecewise-linear functions."""

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from actlab import vector_ops as vo

# ----------------------------------------------------------------------------
# logits -> probabilities
z = [2.0, 1.0, 0.1]
a = vo.softmax(z)
print("logits       ", z)
print("probabilities", np.round(a, 6), " sum =", a.sum())
print("decoded class", int(np.argmax(a)))

# the Jacobian is symmetric with zero row sums; the diagonal is a_i (1 - a_i)
J = vo.softmax_jacobian(z)
print("\nJacobian:\n", np.round(J, 6))
print("row sums:", np.round(J.sum(axis=1), 15))

# binary threshold decode on a single probability
for p in (0.7, 0.5, 0.2):
    print(f"threshold_decode({p}) = {vo.threshold_decode(p)}")

# ----------------------------------------------------------------------------
# a maxout unit takes the max over k affine pieces of the same input
rng = np.random.default_rng(3)
unit = vo.MaxoutUnit(W=rng.normal(size=(4, 1)), b=rng.normal(size=4))
xs = np.linspace(-4, 4, 801)
vals = np.array([vo.maxout([x], unit)[0] for x in xs])
winners = np.array([vo.maxout([x], unit)[1] for x in xs])

fig, ax = plt.subplots(figsize=(7, 4))
for j in range(unit.k):
    ax.plot(xs, unit.W[j, 0] * xs + unit.b[j], lw=0.8, ls="--", alpha=0.6)
ax.plot(xs, vals, "k", lw=2, label="maxout (upper envelope)")
ax.legend()
ax.grid(alpha=0.3)
ax.set_xlabel("x")
fig.tight_layout()
fig.savefig("demo_maxout_envelope.png", dpi=120)
print(f"\nmaxout uses {len(set(winners.tolist()))} of {unit.k} pieces "
      f"on [-4, 4]; wrote demo_maxout_envelope.png")

# gradients flow only into the winning piece
dW, db, dx = vo.maxout_grad([0.5], unit)
print("winner one-hot bias grad:", db)
