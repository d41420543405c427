"""Step-size schedules for the weight and model updates.

Two kinds. ``constant`` uses eta0/beta0 as-is. ``theory`` scales them
from the horizon, eta = eta0 * T^(-1/4) and beta = beta0 * T^(-3/4),
the orders under which the time-averaged conflict error decays at
O(T^(-1/4)); both are constant over t for a fixed horizon.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import InvalidInputError

KINDS = ("constant", "theory")


@dataclass(frozen=True)
class StepSchedule:
    kind: str = "theory"
    eta0: float = 0.5
    beta0: float = 0.1

    def __post_init__(self):
        if self.kind not in KINDS:
            raise InvalidInputError(f"schedule kind must be one of {KINDS}, got {self.kind!r}")
        if not (self.eta0 > 0.0 and self.beta0 > 0.0):
            raise InvalidInputError("eta0 and beta0 must be positive")

    def rates(self, horizon: int) -> tuple[float, float]:
        """(eta, beta) for a run of ``horizon`` iterations."""
        if horizon < 1:
            raise InvalidInputError("horizon must be >= 1")
        if self.kind == "constant":
            return self.eta0, self.beta0
        t = float(horizon)
        return self.eta0 * t**-0.25, self.beta0 * t**-0.75
