"""Dynamic-weighting conflict-resolving optimization loop.

Each iteration draws three independent samples per agent (keyed RNG, so
draws are order-independent), updates the simplex weights from inner
products of the first two sample gradients, then takes a model step
along the weighted third-sample gradient:

    gamma_{t+1} = project(gamma_t - eta * U_t gamma_t)
    Omega_{t+1} = Omega_t - beta * J(d3) gamma_{t+1}

where U_t is J(d1)' J(d2) for the ``matrix`` variant, or its diagonal
applied coordinatewise for the ``literal-diagonal`` variant. A static
baseline runs the same loop with frozen weights. Both log, per
iteration: weights, per-agent losses, conflict error against the
min-norm weighting at the current iterate, generalization error, and
the Pareto gap.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Protocol

import numpy as np

from .. import _kernels
from ..errors import ConfigurationError, InvalidInputError
from .metrics import conflict_error, generalization_error
from .minnorm import check_gradient_matrix, min_norm_weights
from .model import JointModel
from .schedule import StepSchedule
from .simplex import check_weight_vector, project_to_simplex

VARIANTS = ("matrix", "literal-diagonal")


class GradientTask(Protocol):
    """What the coordination loop needs from a task."""

    n_agents: int

    def init_model(self, seed: int) -> JointModel: ...

    def sample_gradient(
        self, model: JointModel, agent: int, iteration: int, slot: int, seed: int
    ) -> np.ndarray: ...

    def train_gradients(self, model: JointModel) -> np.ndarray: ...

    def train_losses(self, model: JointModel) -> np.ndarray: ...

    def population_gradients(self, model: JointModel) -> np.ndarray | None: ...

    def project_iterate(self, omega: np.ndarray) -> np.ndarray: ...


@dataclass(frozen=True)
class OptimizerState:
    """One iterate of the coordination loop."""

    t: int
    gamma: np.ndarray
    model: JointModel
    rng_seed: int
    variant: str


@dataclass(frozen=True)
class MetricRecord:
    """Per-iteration instrumentation, evaluated at the pre-update iterate."""

    t: int
    gamma: tuple[float, ...]
    losses: tuple[float, ...]
    c_error: float
    c_error_avg: float
    g_error: float
    pareto_gap: float


@dataclass
class TrajectoryLog:
    """Per-iteration metric records for one task execution."""

    records: list[MetricRecord] = field(default_factory=list)

    @property
    def c_errors(self) -> np.ndarray:
        return np.array([r.c_error for r in self.records])

    @property
    def g_errors(self) -> np.ndarray:
        return np.array([r.g_error for r in self.records])

    @property
    def final_c_error_avg(self) -> float:
        return self.records[-1].c_error_avg


@dataclass
class RunResult:
    states: list[OptimizerState]
    log: TrajectoryLog

    @property
    def final(self) -> OptimizerState:
        return self.states[-1]


def dynamic_weight_step(
    gamma: np.ndarray,
    j1: np.ndarray,
    j2: np.ndarray,
    eta: float,
    variant: str = "matrix",
) -> np.ndarray:
    """One weight update from two independently sampled gradient matrices.

    ``matrix``: gamma - eta * (J1' J2) gamma, then projection.
    ``literal-diagonal``: per-coordinate gamma_i - eta * <g1_i, g2_i>,
    then projection.
    """
    g = check_weight_vector(gamma)
    a = check_gradient_matrix(j1)
    b = check_gradient_matrix(j2)
    if a.shape != b.shape or a.shape[1] != g.shape[0]:
        raise InvalidInputError("gradient matrices and gamma disagree on shape")
    if eta < 0.0:
        raise InvalidInputError("eta must be nonnegative")
    if variant == "matrix":
        update = (a.T @ b) @ g
    elif variant == "literal-diagonal":
        update = np.einsum("pi,pi->i", a, b)
    else:
        raise InvalidInputError(f"variant must be one of {VARIANTS}, got {variant!r}")
    return project_to_simplex(g - eta * update)


def model_step(
    model: JointModel, j3: np.ndarray, gamma_next: np.ndarray, beta: float
) -> JointModel:
    """Gamma-weighted gradient step on the joint parameters."""
    j = check_gradient_matrix(j3)
    g = check_weight_vector(gamma_next)
    if j.shape[0] != model.dim or j.shape[1] != g.shape[0]:
        raise InvalidInputError("gradient matrix shape disagrees with model/gamma")
    if beta < 0.0:
        raise InvalidInputError("beta must be nonnegative")
    return model.with_parameters(model.parameters - beta * (j @ g))


def _sample_matrix(
    task: GradientTask, model: JointModel, t: int, slot: int, seed: int
) -> np.ndarray:
    cols = [task.sample_gradient(model, i, t, slot, seed) for i in range(task.n_agents)]
    return np.stack([np.asarray(c, dtype=np.float64).ravel() for c in cols], axis=1)


def _metric_record(
    task: GradientTask,
    model: JointModel,
    gamma: np.ndarray,
    t: int,
    c_error_sum: float,
) -> tuple[MetricRecord, float]:
    j_full = task.train_gradients(model)
    gamma_star, gap = min_norm_weights(j_full)
    e_c = conflict_error(j_full, gamma, gamma_star)
    j_pop = task.population_gradients(model)
    e_g = 0.0 if j_pop is None else generalization_error(j_full, j_pop, gamma)
    c_error_sum += e_c
    record = MetricRecord(
        t=t,
        gamma=tuple(float(x) for x in gamma),
        losses=tuple(float(x) for x in task.train_losses(model)),
        c_error=e_c,
        c_error_avg=c_error_sum / (t + 1),
        g_error=e_g,
        pareto_gap=gap,
    )
    return record, c_error_sum


def _run_loop(
    task: GradientTask,
    schedule: StepSchedule,
    horizon: int,
    seed: int,
    variant: str,
    update_gamma: Callable[[np.ndarray, np.ndarray, np.ndarray, float], np.ndarray],
    gamma0: np.ndarray,
    keep_states: bool,
    on_iteration: Callable[[int], None] | None = None,
) -> RunResult:
    if horizon < 1:
        raise InvalidInputError("T must be >= 1")
    if task.n_agents < 1:
        raise ConfigurationError("task has no agents")
    eta, beta = schedule.rates(horizon)

    model = task.init_model(seed)
    gamma = gamma0.copy()
    states = [OptimizerState(0, gamma.copy(), model, seed, variant)]
    log = TrajectoryLog()
    c_error_sum = 0.0

    for t in range(horizon):
        record, c_error_sum = _metric_record(task, model, gamma, t, c_error_sum)
        log.records.append(record)

        j1 = _sample_matrix(task, model, t, 1, seed)
        j2 = _sample_matrix(task, model, t, 2, seed)
        j3 = _sample_matrix(task, model, t, 3, seed)
        gamma = update_gamma(gamma, j1, j2, eta)
        omega = model.parameters - beta * (j3 @ gamma)
        model = model.with_parameters(task.project_iterate(omega))

        if keep_states:
            states.append(OptimizerState(t + 1, gamma.copy(), model, seed, variant))
        if on_iteration is not None:
            on_iteration(t)
    if not keep_states:
        states.append(OptimizerState(horizon, gamma.copy(), model, seed, variant))
    return RunResult(states=states, log=log)


def run_conflict_resolving(
    task: GradientTask,
    schedule: StepSchedule,
    horizon: int,
    seed: int,
    variant: str = "matrix",
    keep_states: bool = True,
    on_iteration: Callable[[int], None] | None = None,
) -> RunResult:
    """Run the dynamic-weighting loop for ``horizon`` iterations.

    Bit-reproducible for fixed (seed, variant, schedule, task): all
    sampling is keyed by (seed, agent, iteration, slot).
    """
    if variant not in VARIANTS:
        raise InvalidInputError(f"variant must be one of {VARIANTS}, got {variant!r}")
    gamma0 = np.full(task.n_agents, 1.0 / task.n_agents)

    def update(gamma, j1, j2, eta):
        return dynamic_weight_step(gamma, j1, j2, eta, variant)

    return _run_loop(
        task, schedule, horizon, seed, variant, update, gamma0, keep_states, on_iteration
    )


def run_static_baseline(
    task: GradientTask,
    gamma_fixed: np.ndarray,
    schedule: StepSchedule,
    horizon: int,
    seed: int,
    keep_states: bool = True,
    on_iteration: Callable[[int], None] | None = None,
) -> RunResult:
    """Same loop and metrics with the weighting frozen at ``gamma_fixed``."""
    gamma0 = check_weight_vector(gamma_fixed)
    if gamma0.shape[0] != task.n_agents:
        raise InvalidInputError("gamma_fixed length != number of agents")

    def update(gamma, j1, j2, eta):
        return gamma

    return _run_loop(
        task, schedule, horizon, seed, "matrix", update, gamma0, keep_states, on_iteration
    )
