"""Pure-numpy implementations of the hot kernels.

Semantics here are the reference; the compiled backend in ``_core.pyx``
mirrors them operation for operation. Inputs are assumed to be finite
float64 arrays (public wrappers validate).
"""

from __future__ import annotations

import numpy as np

BACKEND = "python"

# Inputs whose entries are nonnegative and sum to 1 within this tolerance
# are already valid weight vectors and are returned unchanged, which makes
# the projection exactly idempotent.
_SIMPLEX_ATOL = 1e-12


def simplex_project(v: np.ndarray) -> np.ndarray:
    """Euclidean projection of a vector onto the probability simplex.

    Sort-and-threshold closed form, O(n log n).
    """
    v = np.ascontiguousarray(v, dtype=np.float64)
    n = v.shape[0]
    if n == 1:
        return np.array([1.0])
    if np.all(v >= 0.0) and abs(float(v.sum()) - 1.0) <= _SIMPLEX_ATOL:
        return v.copy()
    u = np.sort(v)[::-1]
    css = np.cumsum(u)
    idx = np.arange(1, n + 1)
    active = u + (1.0 - css) / idx > 0.0
    rho = int(np.nonzero(active)[0][-1])
    theta = (css[rho] - 1.0) / (rho + 1.0)
    return np.maximum(v - theta, 0.0)


def min_norm_gram(gram: np.ndarray, tol: float = 1e-10, max_iter: int = 100_000) -> np.ndarray:
    """Weights on the simplex minimizing gamma' G gamma for a PSD Gram matrix G.

    One column: trivial. Two columns: exact 1-d minimization. Three or
    more: projected-gradient descent from the uniform point with step
    1/(2 tr G) (a safe 1/L since tr G >= lambda_max for PSD G), stopping
    when the iterate moves by at most ``tol`` in max-norm.
    """
    gram = np.ascontiguousarray(gram, dtype=np.float64)
    k = gram.shape[0]
    if k == 1:
        return np.array([1.0])
    if k == 2:
        g11, g12, g22 = gram[0, 0], gram[0, 1], gram[1, 1]
        denom = g11 + g22 - 2.0 * g12
        if denom <= 0.0:
            a = 0.5
        else:
            a = min(1.0, max(0.0, (g22 - g12) / denom))
        return np.array([a, 1.0 - a])

    gamma = np.full(k, 1.0 / k)
    lip = 2.0 * float(np.trace(gram))
    if lip <= 0.0:
        return gamma
    step = 1.0 / lip
    two_g = 2.0 * gram
    for _ in range(max_iter):
        nxt = simplex_project(gamma - step * (two_g @ gamma))
        delta = float(np.max(np.abs(nxt - gamma)))
        gamma = nxt
        if delta <= tol:
            break
    return gamma
