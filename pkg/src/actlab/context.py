"""Evaluation context: train/eval mode plus the seeded random stream.

Stochastic activations draw their coefficients from the context's generator
while training and substitute deterministic expectations in eval mode.  A
context is not shared across threads; workers derive independent streams
from a root seed via `derive_stream`.
"""

from dataclasses import dataclass, field

import numpy as np

TRAIN = "train"
EVAL = "eval"

PER_CALL = "per_call"
PER_BATCH = "per_batch"


@dataclass
class EvalContext:
    """Mode, random stream and redraw scope for stochastic activations.

    In eval mode the generator is never consumed, so repeated eval-mode
    calls are pure functions of their arguments.
    """

    mode: str = EVAL
    rng: np.random.Generator | None = None
    sample_scope: str = PER_BATCH

    def __post_init__(self):
        if self.mode not in (TRAIN, EVAL):
            raise ValueError(f"mode must be {TRAIN!r} or {EVAL!r}, got {self.mode!r}")
        if self.sample_scope not in (PER_CALL, PER_BATCH):
            raise ValueError(f"unknown sample scope {self.sample_scope!r}")
        if self.mode == TRAIN and self.rng is None:
            raise ValueError("train mode requires a seeded generator")

    @property
    def training(self):
        return self.mode == TRAIN

    @classmethod
    def train(cls, seed, sample_scope=PER_BATCH):
        """Training context with a deterministic stream for `seed`."""
        return cls(TRAIN, np.random.default_rng(seed), sample_scope)

    @classmethod
    def eval_mode(cls):
        """Deterministic context: stochastic kinds use expectation substitutes."""
        return cls(EVAL, None)


def derive_stream(root_seed, index):
    """Independent generator for worker `index`, reproducible from `root_seed`."""
    return np.random.default_rng(np.random.SeedSequence((int(root_seed), int(index))))
