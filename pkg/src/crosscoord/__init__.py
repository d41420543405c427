"""Conflict-resolving multi-agent cross-layer coordination.

A dynamic-weighting stochastic multi-gradient optimizer with conflict
and generalization instrumentation, driven by an agent controller that
detects goals, separates them into per-layer subtasks, selects agents by
capability cards, and mediates their conflicting objectives. Includes a
desk-scale synthetic simulator standing in for live network traces.
"""

from ._kernels import BACKEND as kernel_backend

__version__ = "0.1.0"

__all__ = ["kernel_backend", "__version__"]
