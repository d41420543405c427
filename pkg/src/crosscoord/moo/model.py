"""Joint parameter vector shared by all agents of one task."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import InvalidInputError

Segment = tuple[str, int, int]


@dataclass(frozen=True)
class ParameterLayout:
    """Named, contiguous, non-overlapping slices covering [0, dim).

    Typical layouts: a single shared segment for oracle tasks, or a shared
    backbone segment followed by one head segment per agent.
    """

    segments: tuple[Segment, ...]

    def __post_init__(self):
        if not self.segments:
            raise InvalidInputError("layout needs at least one segment")
        pos = 0
        names = set()
        for name, start, stop in self.segments:
            if name in names:
                raise InvalidInputError(f"duplicate segment name {name!r}")
            names.add(name)
            if start != pos or stop <= start:
                raise InvalidInputError(
                    f"segment {name!r} [{start}, {stop}) is not contiguous from {pos}"
                )
            pos = stop

    @property
    def dim(self) -> int:
        return self.segments[-1][2]

    def slice_of(self, name: str) -> slice:
        for seg_name, start, stop in self.segments:
            if seg_name == name:
                return slice(start, stop)
        raise KeyError(name)


@dataclass(frozen=True)
class JointModel:
    """Flat parameter vector plus the layout describing its slices."""

    parameters: np.ndarray
    layout: ParameterLayout

    def __post_init__(self):
        params = np.ascontiguousarray(self.parameters, dtype=np.float64)
        if params.ndim != 1:
            raise InvalidInputError("parameters must be a flat vector")
        if params.shape[0] != self.layout.dim:
            raise InvalidInputError(
                f"parameter count {params.shape[0]} != layout dim {self.layout.dim}"
            )
        object.__setattr__(self, "parameters", params)

    @property
    def dim(self) -> int:
        return self.parameters.shape[0]

    def segment(self, name: str) -> np.ndarray:
        return self.parameters[self.layout.slice_of(name)]

    def with_parameters(self, parameters: np.ndarray) -> "JointModel":
        """Same layout, new parameter values."""
        return JointModel(parameters, self.layout)


def shared_layout(dim: int) -> ParameterLayout:
    """Layout with a single fully shared segment."""
    return ParameterLayout((("shared", 0, dim),))
