"""Probability-simplex geometry: validation and Euclidean projection."""

from __future__ import annotations

import numpy as np

from .. import _kernels
from ..errors import InvalidInputError

#: Absolute tolerance on sum(weights) == 1 for a valid weight vector.
WEIGHT_SUM_ATOL = 1e-12


def check_weight_vector(weights: np.ndarray) -> np.ndarray:
    """Validate the weight-vector invariants and return a float64 copy.

    Entries must be nonnegative and sum to 1 within ``WEIGHT_SUM_ATOL``.
    """
    w = np.ascontiguousarray(weights, dtype=np.float64)
    if w.ndim != 1 or w.size == 0:
        raise InvalidInputError("weight vector must be a non-empty 1-d array")
    if not np.all(np.isfinite(w)):
        raise InvalidInputError("weight vector has non-finite entries")
    if np.any(w < 0.0):
        raise InvalidInputError("weight vector has negative entries")
    if abs(float(w.sum()) - 1.0) > WEIGHT_SUM_ATOL:
        raise InvalidInputError(f"weights sum to {w.sum()!r}, expected 1")
    return w


def project_to_simplex(v: np.ndarray) -> np.ndarray:
    """Euclidean-nearest point on the probability simplex.

    Sort-and-threshold closed form. Idempotent: outputs (and any input
    already satisfying the weight-vector invariants) are returned
    unchanged, bit for bit.
    """
    arr = np.asarray(v, dtype=np.float64)
    if arr.ndim != 1 or arr.size == 0:
        raise InvalidInputError("input must be a non-empty 1-d vector")
    if not np.all(np.isfinite(arr)):
        raise InvalidInputError("input has non-finite entries")
    return _kernels.simplex_project(arr)
