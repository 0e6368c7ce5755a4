"""Exception types shared across the library."""


class ActivationError(Exception):
    """Base class for all actlab errors."""


class UnknownKindError(ActivationError, KeyError):
    """Raised when an activation name is not in the registry."""

    def __init__(self, name):
        super().__init__(f"unknown activation kind: {name!r}")
        self.name = name


class InvalidParameterError(ActivationError, ValueError):
    """Raised when a parameter set violates a kind's invariants."""


class NonFiniteInputError(ActivationError, ValueError):
    """Raised when an evaluation input is NaN or infinite."""


class KinkError(ActivationError, ValueError):
    """Raised in strict mode when a gradient is requested at a kink."""


class NotStochasticError(ActivationError, ValueError):
    """Raised when a stochastic-only operation is applied to a deterministic kind."""


class TrainingDivergedError(ActivationError, RuntimeError):
    """Raised when a training run produces a non-finite loss or parameter."""

    def __init__(self, round_index, batch_index, message="training diverged"):
        super().__init__(f"{message} (round {round_index}, batch {batch_index})")
        self.round_index = round_index
        self.batch_index = batch_index
