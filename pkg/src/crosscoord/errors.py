"""Exception types shared across the package."""


class CrossCoordError(Exception):
    """Base class for all package errors."""


class InvalidInputError(CrossCoordError, ValueError):
    """Malformed numeric input: non-finite entries, shape mismatch, bad range."""


class ConfigurationError(CrossCoordError):
    """Invalid or incomplete configuration (empty dataset, missing table entry, ...)."""


class RegistrationConflictError(CrossCoordError):
    """An agent id was registered twice."""


class AssignmentError(CrossCoordError):
    """A subtask was handed to an agent of the wrong layer."""


class UnsatisfiableSubtaskError(CrossCoordError):
    """No registered agent can serve a subtask."""

    def __init__(self, subtask_id: str, message: str | None = None):
        self.subtask_id = subtask_id
        super().__init__(message or f"no candidate agent for subtask {subtask_id!r}")


class IncompleteEvaluationError(CrossCoordError):
    """Goal evaluation was attempted with missing subtask reports."""
