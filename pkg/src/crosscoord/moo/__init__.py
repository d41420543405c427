"""Multi-objective core: simplex geometry, min-norm weighting, dynamic
weighting loop, conflict/generalization metrics, and performance bounds."""

from .bounds import BoundInputs, ScalingFit, c_error_upper_bound, fit_scaling_exponents
from .logio import dump_trajectory, load_trajectory, record_to_dict
from .metrics import conflict_error, generalization_error, per_agent_g_error
from .minnorm import min_norm_weights, pareto_gap, stack_gradients
from .model import JointModel, ParameterLayout, shared_layout
from .optimizer import (
    GradientTask,
    MetricRecord,
    OptimizerState,
    RunResult,
    TrajectoryLog,
    dynamic_weight_step,
    model_step,
    run_conflict_resolving,
    run_static_baseline,
)
from .schedule import StepSchedule
from .simplex import check_weight_vector, project_to_simplex

__all__ = [
    "BoundInputs",
    "GradientTask",
    "JointModel",
    "MetricRecord",
    "OptimizerState",
    "ParameterLayout",
    "RunResult",
    "ScalingFit",
    "StepSchedule",
    "TrajectoryLog",
    "c_error_upper_bound",
    "check_weight_vector",
    "conflict_error",
    "dump_trajectory",
    "dynamic_weight_step",
    "fit_scaling_exponents",
    "generalization_error",
    "load_trajectory",
    "min_norm_weights",
    "model_step",
    "pareto_gap",
    "per_agent_g_error",
    "project_to_simplex",
    "record_to_dict",
    "run_conflict_resolving",
    "run_static_baseline",
    "shared_layout",
    "stack_gradients",
]
