"""Loss functions, predictor models, and oracle tasks with exact structure."""

from .gradcheck import finite_difference_check
from .lingauss import LinearGaussianTask
from .losses import LossKind, batch_loss_and_dpred, loss_and_gradient
from .population import population_gradient
from .predictor import (
    PredictorModel,
    SampleBatch,
    agent_loss_and_gradient,
    agent_loss_gradient,
    per_sample_gradients,
)
from .quadratic import QuadraticTask, lipschitz_constants, quadratic_gradients

__all__ = [
    "LinearGaussianTask",
    "LossKind",
    "PredictorModel",
    "QuadraticTask",
    "SampleBatch",
    "agent_loss_and_gradient",
    "agent_loss_gradient",
    "batch_loss_and_dpred",
    "finite_difference_check",
    "lipschitz_constants",
    "loss_and_gradient",
    "per_sample_gradients",
    "population_gradient",
    "quadratic_gradients",
]
