"""Per-sample regression losses with hand-derived gradients.

Three kinds, all functions of the residual e = prediction - target:
absolute error |e|, squared error e^2, and log cosh e. Gradients with
respect to the prediction are sign(e) (0 at the kink), 2e, and tanh(e).
"""

from __future__ import annotations

from enum import Enum

import numpy as np

from ..errors import InvalidInputError

_LOG2 = float(np.log(2.0))


class LossKind(str, Enum):
    L1 = "l1"
    MSE = "mse"
    LOG_COSH = "log_cosh"

    @classmethod
    def from_tag(cls, tag: str) -> "LossKind":
        try:
            return cls(tag)
        except ValueError:
            raise InvalidInputError(
                f"unknown loss kind {tag!r}; expected one of {[k.value for k in cls]}"
            ) from None


def _log_cosh(e: np.ndarray) -> np.ndarray:
    # log cosh e = |e| + log(1 + exp(-2|e|)) - log 2, stable for large |e|
    a = np.abs(e)
    return a + np.log1p(np.exp(-2.0 * a)) - _LOG2


def batch_loss_and_dpred(
    kind: LossKind, predictions: np.ndarray, targets: np.ndarray
) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized per-sample losses and d(loss)/d(prediction)."""
    p = np.asarray(predictions, dtype=np.float64)
    t = np.asarray(targets, dtype=np.float64)
    if p.shape != t.shape:
        raise InvalidInputError("predictions and targets differ in shape")
    if not (np.all(np.isfinite(p)) and np.all(np.isfinite(t))):
        raise InvalidInputError("non-finite prediction or target")
    e = p - t
    if kind == LossKind.L1:
        return np.abs(e), np.sign(e)
    if kind == LossKind.MSE:
        return e * e, 2.0 * e
    if kind == LossKind.LOG_COSH:
        return _log_cosh(e), np.tanh(e)
    raise InvalidInputError(f"unknown loss kind {kind!r}")


def loss_and_gradient(kind: LossKind, prediction: float, target: float) -> tuple[float, float]:
    """Loss value and gradient w.r.t. the prediction for one sample."""
    values, grads = batch_loss_and_dpred(
        kind, np.array([prediction], dtype=np.float64), np.array([target], dtype=np.float64)
    )
    return float(values[0]), float(grads[0])
