from enum import StrEnum


class TrainingErrorCode(StrEnum):
    TRAINING_ERROR = "TrainingError"
    TRAINING_DIVERGED = "TrainingDiverged"
    TRAINING_TREE_MISMATCH = "TrainingTreeMismatch"
    TRAINING_MISSING_TEACHER = "TrainingMissingTeacher"


class TrainingError(Exception):
    """Base class for exceptions raised while training."""

    error_code: TrainingErrorCode = TrainingErrorCode.TRAINING_ERROR

    def __init__(
        self,
        message: str = "An error occurred during training.",
    ):
        self.message = message

        super().__init__(self.message)


class TrainingDivergedError(TrainingError):
    """Exception raised when a loss or gradient becomes non-finite."""

    error_code: TrainingErrorCode = TrainingErrorCode.TRAINING_DIVERGED

    def __init__(
        self,
        phase: int,
        epoch: int,
        message: str | None = None,
    ):
        self.phase = phase
        self.epoch = epoch
        super().__init__(
            message or f"Phase {phase} diverged at epoch {epoch}: non-finite loss or gradient."
        )


class TreeDatasetMismatchError(TrainingError):
    error_code: TrainingErrorCode = TrainingErrorCode.TRAINING_TREE_MISMATCH

    def __init__(
        self,
        leaf_count: int,
        k: int,
        message: str | None = None,
    ):
        super().__init__(
            message or f"Hierarchy has {leaf_count} leaves but the dataset has {k} classes."
        )


class MissingTeacherError(TrainingError):
    """Exception raised when a phase needs a teacher checkpoint that does not exist."""

    error_code: TrainingErrorCode = TrainingErrorCode.TRAINING_MISSING_TEACHER

    def __init__(
        self,
        name: str,
        message: str | None = None,
    ):
        super().__init__(message or f"Teacher '{name}' has not been trained yet.")
