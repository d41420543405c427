"""Population-gradient estimation: closed form where the task provides
one, Monte-Carlo from the task's data law otherwise."""

from __future__ import annotations

import numpy as np

from ..errors import ConfigurationError
from ..moo.model import JointModel
from .predictor import per_sample_gradients

#: Fresh samples per Monte-Carlo evaluation.
DEFAULT_BUDGET = 100_000


def population_gradient(
    task,
    model: JointModel,
    agent: int,
    budget: int = DEFAULT_BUDGET,
    seed: int = 0,
) -> tuple[np.ndarray, float]:
    """Population gradient of one agent's loss at the current iterate.

    Returns (gradient, standard error). Closed form gives a zero standard
    error; the Monte-Carlo path draws ``budget`` fresh samples from a
    dedicated stream and reports sqrt(trace(Cov)/n) of the mean estimate.
    """
    if hasattr(task, "closed_form_population_gradient"):
        return task.closed_form_population_gradient(model, agent), 0.0
    if hasattr(task, "population_sample"):
        rng = np.random.default_rng([seed, agent, 0x909])
        x, y = task.population_sample(agent, budget, rng)
        grads = per_sample_gradients(
            task.predictor, model, x, y, agent, task.loss_kind(agent)
        )
        mean = grads.mean(axis=0)
        n = grads.shape[0]
        if n > 1:
            varsum = float(np.sum((grads - mean) ** 2)) / (n - 1)
            stderr = float(np.sqrt(varsum / n))
        else:
            stderr = float("inf")
        return mean, stderr
    raise ConfigurationError(
        "task offers neither a closed-form population gradient nor a sampler"
    )
