from enum import StrEnum


class EvaluationErrorCode(StrEnum):
    EVALUATION_ERROR = "EvaluationError"
    EVALUATION_NO_POSITIVES = "EvaluationNoPositives"
    EVALUATION_EMPTY_SPLIT = "EvaluationEmptySplit"
    EVALUATION_STRUCTURE_MISMATCH = "EvaluationStructureMismatch"


class EvaluationError(Exception):
    """Base class for exceptions for evaluation operations."""

    error_code: EvaluationErrorCode = EvaluationErrorCode.EVALUATION_ERROR

    def __init__(
        self,
        message: str = "An error occurred during evaluation.",
    ):
        self.message = message

        super().__init__(self.message)


class NoPositivesError(EvaluationError):
    """Exception raised when AP is requested for a class without positives."""

    error_code: EvaluationErrorCode = EvaluationErrorCode.EVALUATION_NO_POSITIVES

    def __init__(
        self,
        message: str = "Average precision is undefined without positive labels.",
    ):
        super().__init__(message)


class EmptySplitError(EvaluationError):
    error_code: EvaluationErrorCode = EvaluationErrorCode.EVALUATION_EMPTY_SPLIT

    def __init__(
        self,
        message: str = "Cannot evaluate an empty split.",
    ):
        super().__init__(message)


class StructureMismatchError(EvaluationError):
    """Exception raised when reports or groups describe different class structures."""

    error_code: EvaluationErrorCode = EvaluationErrorCode.EVALUATION_STRUCTURE_MISMATCH

    def __init__(
        self,
        message: str = "Reports do not share the same class and group structure.",
    ):
        super().__init__(message)
