"""Linear-Gaussian regression task with closed-form population gradients.

Each agent observes y = theta_i' x + noise with x ~ N(0, I), and all
agents fit the shared-backbone predictor under squared error. Because
E[x x'] = I, the population gradient at any parameter point is exact:

    grad_W   = 2 (W h_i - theta_i) h_i'
    grad_h_i = 2 W' (W h_i - theta_i)

which makes the train-vs-population gradient gap (the G-error) exactly
measurable at any iterate.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import ConfigurationError, InvalidInputError
from ..moo.model import JointModel
from ..rngkeys import sample_index
from .losses import LossKind
from .predictor import PredictorModel, SampleBatch, agent_loss_and_gradient


@dataclass(frozen=True)
class LinearGaussianTask:
    predictor: PredictorModel
    thetas: np.ndarray
    noise_std: float
    inputs: tuple[np.ndarray, ...]
    targets: tuple[np.ndarray, ...]

    def __post_init__(self):
        k, w = self.predictor.n_agents, self.predictor.window
        thetas = np.ascontiguousarray(self.thetas, dtype=np.float64)
        if thetas.shape != (k, w):
            raise InvalidInputError(f"thetas must be ({k}, {w})")
        if len(self.inputs) != k or len(self.targets) != k:
            raise InvalidInputError("need one dataset per agent")
        for x, y in zip(self.inputs, self.targets):
            if x.ndim != 2 or x.shape[1] != w or x.shape[0] != y.shape[0] or y.shape[0] < 1:
                raise ConfigurationError("agent dataset empty or mis-shaped")
        object.__setattr__(self, "thetas", thetas)

    @classmethod
    def generate(
        cls,
        predictor: PredictorModel,
        train_size: int,
        seed: int,
        noise_std: float = 0.5,
    ) -> "LinearGaussianTask":
        """Fresh true weights and per-agent training sets of ``train_size``."""
        if train_size < 1:
            raise ConfigurationError("train_size must be >= 1")
        rng = np.random.default_rng([seed, 0x11A])
        k, w = predictor.n_agents, predictor.window
        thetas = rng.normal(0.0, 1.0 / np.sqrt(w), (k, w))
        inputs, targets = [], []
        for i in range(k):
            x = rng.normal(0.0, 1.0, (train_size, w))
            y = x @ thetas[i] + rng.normal(0.0, noise_std, train_size)
            inputs.append(x)
            targets.append(y)
        return cls(predictor, thetas, noise_std, tuple(inputs), tuple(targets))

    @property
    def n_agents(self) -> int:
        return self.predictor.n_agents

    @property
    def train_size(self) -> int:
        return self.targets[0].shape[0]

    def init_model(self, seed: int) -> JointModel:
        return self.predictor.init_model(seed)

    def sample_gradient(
        self, model: JointModel, agent: int, iteration: int, slot: int, seed: int
    ) -> np.ndarray:
        idx = sample_index(seed, agent, iteration, slot, self.train_size)
        batch = SampleBatch(
            self.inputs[agent][idx : idx + 1], self.targets[agent][idx : idx + 1], agent, slot
        )
        return agent_loss_and_gradient(self.predictor, model, batch, LossKind.MSE)[1]

    def _full_batch(self, agent: int) -> SampleBatch:
        return SampleBatch(self.inputs[agent], self.targets[agent], agent)

    def train_gradients(self, model: JointModel) -> np.ndarray:
        cols = [
            agent_loss_and_gradient(self.predictor, model, self._full_batch(i), LossKind.MSE)[1]
            for i in range(self.n_agents)
        ]
        return np.stack(cols, axis=1)

    def train_losses(self, model: JointModel) -> np.ndarray:
        return np.array(
            [
                agent_loss_and_gradient(self.predictor, model, self._full_batch(i), LossKind.MSE)[0]
                for i in range(self.n_agents)
            ]
        )

    def closed_form_population_gradient(self, model: JointModel, agent: int) -> np.ndarray:
        backbone, heads = self.predictor.unpack(model.parameters)
        head = heads[agent]
        residual = backbone @ head - self.thetas[agent]
        grad = np.zeros(self.predictor.dim)
        nb = self.predictor.window * self.predictor.features
        grad[:nb] = (2.0 * np.outer(residual, head)).ravel()
        start = nb + agent * self.predictor.features
        grad[start : start + self.predictor.features] = 2.0 * backbone.T @ residual
        return grad

    def population_gradients(self, model: JointModel) -> np.ndarray:
        return np.stack(
            [self.closed_form_population_gradient(model, i) for i in range(self.n_agents)],
            axis=1,
        )

    def population_sample(self, agent: int, n: int, rng: np.random.Generator):
        """Fresh draw of (inputs, targets) from the agent's data law."""
        x = rng.normal(0.0, 1.0, (n, self.predictor.window))
        y = x @ self.thetas[agent] + rng.normal(0.0, self.noise_std, n)
        return x, y

    def loss_kind(self, agent: int) -> LossKind:
        return LossKind.MSE

    def project_iterate(self, omega: np.ndarray) -> np.ndarray:
        return omega
