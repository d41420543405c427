"""Min-norm weighting of stacked per-agent gradients.

The conflict-avoiding direction is the point of smallest norm in the
convex hull of the agents' gradients: minimize ||J gamma|| over the
probability simplex. Its minimizer gamma* is the Pareto-stationary
weighting at the current iterate; the minimum value is the Pareto gap
(zero exactly when some simplex weighting of the gradients vanishes).
"""

from __future__ import annotations

import numpy as np

from .. import _kernels
from ..errors import InvalidInputError

#: Iterate-change tolerance of the projected-gradient solve.
SOLVER_TOL = 1e-10
#: Iteration cap of the projected-gradient solve.
SOLVER_MAX_ITER = 100_000


def check_gradient_matrix(columns: np.ndarray) -> np.ndarray:
    """Validate a column-stacked gradient matrix (dim P x agents k)."""
    j = np.ascontiguousarray(columns, dtype=np.float64)
    if j.ndim != 2 or j.shape[1] == 0 or j.shape[0] == 0:
        raise InvalidInputError("gradient matrix must be 2-d with >= 1 column")
    if not np.all(np.isfinite(j)):
        raise InvalidInputError("gradient matrix has non-finite entries")
    return j


def stack_gradients(columns) -> np.ndarray:
    """Column-stack per-agent gradient vectors into a gradient matrix."""
    cols = [np.ascontiguousarray(c, dtype=np.float64).ravel() for c in columns]
    if not cols:
        raise InvalidInputError("need at least one gradient column")
    dim = cols[0].shape[0]
    for c in cols:
        if c.shape[0] != dim:
            raise InvalidInputError("gradient columns differ in dimension")
    return check_gradient_matrix(np.stack(cols, axis=1))


def min_norm_weights(gradients: np.ndarray) -> tuple[np.ndarray, float]:
    """Simplex weights minimizing ||J gamma||, and the attained minimum.

    Exact for one or two columns; projected-gradient descent on the Gram
    matrix otherwise (tolerance ``SOLVER_TOL``, cap ``SOLVER_MAX_ITER``).
    """
    j = check_gradient_matrix(gradients)
    gram = j.T @ j
    gamma = _kernels.min_norm_gram(gram, SOLVER_TOL, SOLVER_MAX_ITER)
    value = float(np.sqrt(max(float(gamma @ gram @ gamma), 0.0)))
    return gamma, value


def pareto_gap(gradients: np.ndarray) -> float:
    """Norm of the min-norm convex combination of the gradient columns."""
    return min_norm_weights(gradients)[1]
