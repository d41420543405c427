"""Conflict and generalization error metrics.

C-error measures how far the current weighting is from the
Pareto-stationary one, through the gradients:

    E_C = || sum_i (gamma_i - gamma*_i) g_i || = ||J (gamma - gamma*)||

G-error measures the gap between training-set and population gradients,
per agent or as the gamma-weighted total:

    E_G^i = ||g_train^i - g_pop^i||
    E_G   = ||(J_train - J_pop) gamma||
"""

from __future__ import annotations

import numpy as np

from ..errors import InvalidInputError
from .minnorm import check_gradient_matrix
from .simplex import check_weight_vector


def conflict_error(gradients: np.ndarray, gamma: np.ndarray, gamma_star: np.ndarray) -> float:
    """||J (gamma - gamma*)||: error induced by weighting away from gamma*."""
    j = check_gradient_matrix(gradients)
    g = check_weight_vector(gamma)
    gs = check_weight_vector(gamma_star)
    if g.shape != gs.shape or g.shape[0] != j.shape[1]:
        raise InvalidInputError("gamma, gamma*, and gradient columns disagree on agent count")
    return float(np.linalg.norm(j @ (g - gs)))


def per_agent_g_error(g_train: np.ndarray, g_pop: np.ndarray) -> float:
    """||g_train - g_pop|| for one agent."""
    a = np.asarray(g_train, dtype=np.float64)
    b = np.asarray(g_pop, dtype=np.float64)
    if a.shape != b.shape:
        raise InvalidInputError("gradient dimensions differ")
    if not (np.all(np.isfinite(a)) and np.all(np.isfinite(b))):
        raise InvalidInputError("non-finite gradient entries")
    return float(np.linalg.norm(a - b))


def generalization_error(
    j_train: np.ndarray, j_pop: np.ndarray, gamma: np.ndarray
) -> float:
    """||(J_train - J_pop) gamma||: gamma-weighted total train/population gap."""
    jt = check_gradient_matrix(j_train)
    jp = check_gradient_matrix(j_pop)
    g = check_weight_vector(gamma)
    if jt.shape != jp.shape:
        raise InvalidInputError("train and population gradient matrices differ in shape")
    if g.shape[0] != jt.shape[1]:
        raise InvalidInputError("gamma length != number of agents")
    return float(np.linalg.norm((jt - jp) @ g))
