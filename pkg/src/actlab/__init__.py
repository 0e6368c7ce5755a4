"""actlab: a catalog of activation functions with certified analytic
gradients, vector ops (softmax/maxout), composite/learnable activations,
a small dense-network harness, and reproducible experiments."""

from . import (catalog, composite, experiments, gradients, netlab, stochastic,
               vector_ops)
from .context import EvalContext, derive_stream
from .errors import (ActivationError, InvalidParameterError, KinkError,
                     NonFiniteInputError, NotStochasticError,
                     TrainingDivergedError, UnknownKindError)

__version__ = "0.1.0"

__all__ = [
    "catalog", "composite", "experiments", "gradients", "netlab",
    "stochastic", "vector_ops", "EvalContext", "derive_stream",
    "ActivationError", "InvalidParameterError", "KinkError",
    "NonFiniteInputError", "NotStochasticError", "TrainingDivergedError",
    "UnknownKindError", "__version__",
]
