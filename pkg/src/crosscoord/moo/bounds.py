"""Closed-form performance bounds and scaling-law fits.

``c_error_upper_bound`` evaluates the guarantee on the time-averaged
conflict error of the dynamic-weighting loop,

    4 / (eta T) + 6 sqrt(3 lfp lf^2 beta / eta) + 3 eta lf^4,

where lf bounds the per-sample loss Lipschitz constant and lfp the
per-sample gradient Lipschitz constant. ``fit_scaling_exponents`` fits
measured G-errors against the predicted O(T^(1/2) D^(-1/2)) law.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..errors import InvalidInputError


@dataclass(frozen=True)
class BoundInputs:
    """Constants entering the error bounds; all strictly positive.

    lf / lfp: loss and gradient Lipschitz constants, valid for every data
    sample on the iterate-confining domain. U: bound on the Frobenius
    norm of the summed gradients. D: training-set size. T: iterations.
    eta / beta: weight and model step sizes.
    """

    lf: float
    lfp: float
    U: float
    D: int
    T: int
    eta: float
    beta: float

    def __post_init__(self):
        for name in ("lf", "lfp", "U", "D", "T", "eta", "beta"):
            value = getattr(self, name)
            if not value > 0:
                raise InvalidInputError(f"{name} must be strictly positive, got {value!r}")


def c_error_upper_bound(b: BoundInputs) -> float:
    """Upper bound on the time-averaged conflict error of the dynamic loop."""
    return (
        4.0 / (b.eta * b.T)
        + 6.0 * math.sqrt(3.0 * b.lfp * b.lf**2 * b.beta / b.eta)
        + 3.0 * b.eta * b.lf**4
    )


@dataclass(frozen=True)
class ScalingFit:
    """Fitted log-log slopes of measured G-error.

    ``slope_d``: slope vs dataset size D at the most common fixed T
    (target -1/2). ``slope_t``: slope vs T at the most common fixed D
    (target +1/2). Either may be None when the runs do not vary that
    axis at >= 3 distinct values.
    """

    slope_d: float | None
    slope_t: float | None


def _fit_slope(x: np.ndarray, y: np.ndarray) -> float:
    return float(np.polyfit(np.log(x), np.log(y), 1)[0])


def fit_scaling_exponents(runs: list[tuple[int, int, float]]) -> ScalingFit:
    """Least-squares log-log slopes of measured G-error vs D and vs T.

    ``runs`` holds (T, D, measured G-error) triples; at least 3 runs, all
    G-errors strictly positive, and at least one axis must vary over >= 3
    distinct values while the other is fixed.
    """
    if len(runs) < 3:
        raise InvalidInputError("need at least 3 runs")
    t_vals = np.array([r[0] for r in runs], dtype=np.float64)
    d_vals = np.array([r[1] for r in runs], dtype=np.float64)
    e_vals = np.array([r[2] for r in runs], dtype=np.float64)
    if np.any(e_vals <= 0.0) or not np.all(np.isfinite(e_vals)):
        raise InvalidInputError("measured G-errors must be finite and positive")

    slope_d = None
    counts_t = {t: int(np.sum(t_vals == t)) for t in set(t_vals)}
    t_fixed = max(counts_t, key=lambda t: (counts_t[t], -t))
    mask = t_vals == t_fixed
    if len(set(d_vals[mask])) >= 3:
        slope_d = _fit_slope(d_vals[mask], e_vals[mask])

    slope_t = None
    counts_d = {d: int(np.sum(d_vals == d)) for d in set(d_vals)}
    d_fixed = max(counts_d, key=lambda d: (counts_d[d], -d))
    mask = d_vals == d_fixed
    if len(set(t_vals[mask])) >= 3:
        slope_t = _fit_slope(t_vals[mask], e_vals[mask])

    if slope_d is None and slope_t is None:
        raise InvalidInputError("runs vary neither D at fixed T nor T at fixed D over >= 3 values")
    return ScalingFit(slope_d=slope_d, slope_t=slope_t)
