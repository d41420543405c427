"""Small shared-backbone predictor standing in for per-agent deep models.

One linear backbone maps a length-w history window to F features; each
agent owns a linear head mapping features to a scalar prediction. All
heads share the backbone through the joint parameter vector, which is
what couples the agents' losses (and creates gradient conflict) even
though their datasets are disjoint.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import InvalidInputError
from ..moo.model import JointModel, ParameterLayout
from .losses import LossKind, batch_loss_and_dpred


@dataclass(frozen=True)
class SampleBatch:
    """Windows and next-value targets for one agent, tagged by sample slot."""

    inputs: np.ndarray
    targets: np.ndarray
    agent_index: int
    slot: int = 1

    def __post_init__(self):
        x = np.ascontiguousarray(self.inputs, dtype=np.float64)
        y = np.ascontiguousarray(self.targets, dtype=np.float64)
        if x.ndim != 2 or y.ndim != 1 or x.shape[0] != y.shape[0] or y.shape[0] < 1:
            raise InvalidInputError("batch needs matching non-empty inputs and targets")
        if self.slot not in (1, 2, 3):
            raise InvalidInputError("sample slot must be 1, 2, or 3")
        object.__setattr__(self, "inputs", x)
        object.__setattr__(self, "targets", y)

    def __len__(self) -> int:
        return self.targets.shape[0]


@dataclass(frozen=True)
class PredictorModel:
    """Linear backbone (window -> features) with per-agent linear heads."""

    window: int = 8
    features: int = 4
    n_agents: int = 3

    def __post_init__(self):
        if self.window < 1 or self.features < 1 or self.n_agents < 1:
            raise InvalidInputError("window, features, and n_agents must be positive")

    @property
    def dim(self) -> int:
        return self.window * self.features + self.n_agents * self.features

    def layout(self) -> ParameterLayout:
        nb = self.window * self.features
        segments = [("backbone", 0, nb)]
        for i in range(self.n_agents):
            segments.append((f"head:{i}", nb + i * self.features, nb + (i + 1) * self.features))
        return ParameterLayout(tuple(segments))

    def init_model(self, seed: int, scale: float = 0.01) -> JointModel:
        rng = np.random.default_rng(seed)
        return JointModel(rng.normal(0.0, scale, self.dim), self.layout())

    def unpack(self, omega: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """(backbone (w, F), heads (k, F)) views of a flat parameter vector."""
        nb = self.window * self.features
        backbone = omega[:nb].reshape(self.window, self.features)
        heads = omega[nb:].reshape(self.n_agents, self.features)
        return backbone, heads

    def predict(self, omega: np.ndarray, inputs: np.ndarray, agent: int) -> np.ndarray:
        backbone, heads = self.unpack(omega)
        x = np.asarray(inputs, dtype=np.float64)
        if x.ndim != 2 or x.shape[1] != self.window:
            raise InvalidInputError(f"inputs must be (n, {self.window}) windows")
        return (x @ backbone) @ heads[agent]


def agent_loss_and_gradient(
    model: PredictorModel, joint: JointModel, batch: SampleBatch, kind: LossKind
) -> tuple[float, np.ndarray]:
    """Mean loss and mean gradient over the batch w.r.t. the full joint vector.

    The backbone slice receives contributions; heads of other agents are
    exactly zero (parameter separation).
    """
    omega = joint.parameters
    if batch.inputs.shape[1] != model.window:
        raise InvalidInputError(
            f"window length {batch.inputs.shape[1]} != model window {model.window}"
        )
    backbone, heads = model.unpack(omega)
    head = heads[batch.agent_index]
    feats = batch.inputs @ backbone
    preds = feats @ head
    losses, dpred = batch_loss_and_dpred(kind, preds, batch.targets)
    n = float(len(batch))

    grad = np.zeros(model.dim)
    nb = model.window * model.features
    grad_backbone = np.outer(batch.inputs.T @ dpred, head) / n
    grad[:nb] = grad_backbone.ravel()
    start = nb + batch.agent_index * model.features
    grad[start : start + model.features] = (feats.T @ dpred) / n
    return float(losses.mean()), grad


def agent_loss_gradient(
    model: PredictorModel, joint: JointModel, batch: SampleBatch, kind: LossKind
) -> np.ndarray:
    """Mean per-sample gradient over the batch (see agent_loss_and_gradient)."""
    return agent_loss_and_gradient(model, joint, batch, kind)[1]


def per_sample_gradients(
    model: PredictorModel,
    joint: JointModel,
    inputs: np.ndarray,
    targets: np.ndarray,
    agent: int,
    kind: LossKind,
) -> np.ndarray:
    """(n, dim) array of single-sample gradients, used by the Monte-Carlo
    population estimator to report a standard error."""
    backbone, heads = model.unpack(joint.parameters)
    head = heads[agent]
    x = np.asarray(inputs, dtype=np.float64)
    feats = x @ backbone
    preds = feats @ head
    _, dpred = batch_loss_and_dpred(kind, preds, np.asarray(targets, dtype=np.float64))

    n = x.shape[0]
    grads = np.zeros((n, model.dim))
    nb = model.window * model.features
    # per-sample backbone gradient is the outer product d_n * x_n head'
    grads[:, :nb] = np.einsum("n,nw,f->nwf", dpred, x, head).reshape(n, nb)
    start = nb + agent * model.features
    grads[:, start : start + model.features] = dpred[:, None] * feats
    return grads
