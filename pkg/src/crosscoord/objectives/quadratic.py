"""Quadratic oracle tasks with computable Pareto structure.

Agent i's objective is f_i(x) = (x - c_i)' A_i (x - c_i) / 2 over a
shared parameter vector, so gradients (A_i (x - c_i)), the Pareto set,
and Lipschitz constants over a confining ball are all exact. An
optional per-agent pool of jittered centers makes the sampled gradients
genuinely stochastic while keeping train/population gradients and the
per-sample Lipschitz constants exactly computable.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..errors import InvalidInputError
from ..moo.model import JointModel, shared_layout
from ..rngkeys import sample_index

_SYM_ATOL = 1e-12


@dataclass(frozen=True)
class QuadraticTask:
    matrices: tuple[np.ndarray, ...]
    centers: tuple[np.ndarray, ...]
    radius: float = 10.0
    center_pools: tuple[np.ndarray, ...] | None = None
    init_scale: float = 0.01
    _train_centers: tuple[np.ndarray, ...] = field(init=False, repr=False)
    _train_offsets: tuple[float, ...] = field(init=False, repr=False)

    def __post_init__(self):
        if not self.matrices or len(self.matrices) != len(self.centers):
            raise InvalidInputError("need one (matrix, center) pair per agent")
        if not self.radius > 0.0:
            raise InvalidInputError("radius must be positive")
        mats, cents = [], []
        dim = np.asarray(self.centers[0]).shape[0]
        for a, c in zip(self.matrices, self.centers):
            a = np.ascontiguousarray(a, dtype=np.float64)
            c = np.ascontiguousarray(c, dtype=np.float64).ravel()
            if a.shape != (dim, dim) or c.shape != (dim,):
                raise InvalidInputError("matrix/center dimensions disagree")
            if np.max(np.abs(a - a.T)) > _SYM_ATOL:
                raise InvalidInputError("matrix is not symmetric")
            if np.min(np.linalg.eigvalsh(a)) < -_SYM_ATOL:
                raise InvalidInputError("matrix has a negative eigenvalue")
            mats.append(a)
            cents.append(c)
        object.__setattr__(self, "matrices", tuple(mats))
        object.__setattr__(self, "centers", tuple(cents))

        if self.center_pools is not None:
            pools = []
            for pool in self.center_pools:
                pool = np.ascontiguousarray(pool, dtype=np.float64)
                if pool.ndim != 2 or pool.shape[1] != dim or pool.shape[0] < 1:
                    raise InvalidInputError("center pool must be a non-empty (D, dim) array")
                pools.append(pool)
            if len(pools) != self.n_agents:
                raise InvalidInputError("need one center pool per agent")
            object.__setattr__(self, "center_pools", tuple(pools))
            train_centers = tuple(pool.mean(axis=0) for pool in pools)
            # mean loss over the pool splits as quad(x - mean) + constant
            offsets = tuple(
                float(np.einsum("np,pq,nq->", pool - tc, a, pool - tc) / (2.0 * pool.shape[0]))
                for pool, tc, a in zip(pools, train_centers, self.matrices)
            )
        else:
            train_centers = self.centers
            offsets = tuple(0.0 for _ in self.centers)
        object.__setattr__(self, "_train_centers", train_centers)
        object.__setattr__(self, "_train_offsets", offsets)

    @classmethod
    def from_curvatures(
        cls,
        curvatures,
        centers,
        radius: float = 10.0,
        jitter_std: float = 0.0,
        pool_size: int = 256,
        pool_seed: int = 0,
        init_scale: float = 0.01,
    ) -> "QuadraticTask":
        """Spherical task: A_i = curvature_i * I, with optional jittered-center
        pools of ``pool_size`` samples per agent (the agent's training set)."""
        centers = [np.asarray(c, dtype=np.float64).ravel() for c in centers]
        dim = centers[0].shape[0]
        matrices = [float(a) * np.eye(dim) for a in curvatures]
        pools = None
        if jitter_std > 0.0:
            rng = np.random.default_rng(pool_seed)
            pools = tuple(
                c + rng.normal(0.0, jitter_std, (pool_size, dim)) for c in centers
            )
        return cls(tuple(matrices), tuple(centers), radius, pools, init_scale)

    @property
    def n_agents(self) -> int:
        return len(self.matrices)

    @property
    def dim(self) -> int:
        return self.centers[0].shape[0]

    def init_model(self, seed: int) -> JointModel:
        rng = np.random.default_rng(seed)
        return JointModel(rng.normal(0.0, self.init_scale, self.dim), shared_layout(self.dim))

    def sample_gradient(
        self, model: JointModel, agent: int, iteration: int, slot: int, seed: int
    ) -> np.ndarray:
        if self.center_pools is None:
            c = self.centers[agent]
        else:
            pool = self.center_pools[agent]
            c = pool[sample_index(seed, agent, iteration, slot, pool.shape[0])]
        return self.matrices[agent] @ (model.parameters - c)

    def gradients(self, omega: np.ndarray) -> np.ndarray:
        """Exact per-agent gradient columns A_i (omega - c_i)."""
        x = np.asarray(omega, dtype=np.float64).ravel()
        if x.shape[0] != self.dim:
            raise InvalidInputError("omega dimension disagrees with the task")
        return np.stack([a @ (x - c) for a, c in zip(self.matrices, self.centers)], axis=1)

    def train_gradients(self, model: JointModel) -> np.ndarray:
        x = model.parameters
        return np.stack(
            [a @ (x - c) for a, c in zip(self.matrices, self._train_centers)], axis=1
        )

    def train_losses(self, model: JointModel) -> np.ndarray:
        x = model.parameters
        return np.array(
            [
                0.5 * float((x - c) @ a @ (x - c)) + off
                for a, c, off in zip(self.matrices, self._train_centers, self._train_offsets)
            ]
        )

    def population_gradients(self, model: JointModel) -> np.ndarray:
        return self.gradients(model.parameters)

    def project_iterate(self, omega: np.ndarray) -> np.ndarray:
        norm = float(np.linalg.norm(omega))
        if norm <= self.radius:
            return omega
        return omega * (self.radius / norm)

    def lipschitz_constants(self) -> tuple[float, float]:
        """(lf, lfp) valid for every data sample on the radius-R ball.

        lfp is the largest eigenvalue over the A_i. lf bounds the sample
        gradient norm, max_i max_c (lambda_max(A_i) R + ||A_i c||), with c
        ranging over the realized center pool (or the exact center); exact
        for spherical A_i.
        """
        lfp = 0.0
        lf = 0.0
        for agent, a in enumerate(self.matrices):
            lam = float(np.max(np.linalg.eigvalsh(a))) if a.size else 0.0
            lfp = max(lfp, lam)
            if self.center_pools is None:
                cs = self.centers[agent][None, :]
            else:
                cs = self.center_pools[agent]
            if lam > 0.0:
                worst_center = float(np.max(np.linalg.norm(cs @ a.T, axis=1)))
                lf = max(lf, lam * self.radius + worst_center)
        return lf, lfp


def quadratic_gradients(task: QuadraticTask, model: JointModel) -> np.ndarray:
    """Exact gradient columns of the quadratic task at the model's iterate."""
    return task.gradients(task.project_iterate(model.parameters))


def lipschitz_constants(task: QuadraticTask) -> tuple[float, float]:
    return task.lipschitz_constants()
