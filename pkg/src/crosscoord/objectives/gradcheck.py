"""Central finite-difference verification of analytic gradients."""

from __future__ import annotations

from typing import Callable

import numpy as np

from ..errors import InvalidInputError

ValueAndGrad = Callable[[np.ndarray], tuple[float, np.ndarray]]


def finite_difference_check(f: ValueAndGrad, x: np.ndarray, h: float = 1e-6) -> float:
    """Max relative disagreement between analytic and central-difference gradients.

    ``f`` returns (value, analytic gradient). Per coordinate the error is
    |analytic - numeric| / max(1, |analytic|); the max over coordinates is
    returned. Not meaningful at non-differentiable points (the absolute-error
    kink must be avoided by the caller).
    """
    if not h > 0.0:
        raise InvalidInputError("h must be positive")
    x = np.asarray(x, dtype=np.float64)
    _, analytic = f(x)
    analytic = np.asarray(analytic, dtype=np.float64)
    if not np.all(np.isfinite(analytic)):
        raise InvalidInputError("analytic gradient is non-finite")

    worst = 0.0
    for i in range(x.shape[0]):
        step = np.zeros_like(x)
        step[i] = h
        up, _ = f(x + step)
        down, _ = f(x - step)
        if not (np.isfinite(up) and np.isfinite(down)):
            raise InvalidInputError("function evaluation is non-finite near x")
        numeric = (up - down) / (2.0 * h)
        err = abs(analytic[i] - numeric) / max(1.0, abs(analytic[i]))
        worst = max(worst, err)
    return worst
