from enum import StrEnum


class DistillErrorCode(StrEnum):
    DISTILL_ERROR = "DistillError"
    DISTILL_SHAPE_MISMATCH = "DistillShapeMismatch"
    DISTILL_INVALID_TEMPERATURE = "DistillInvalidTemperature"


class DistillError(Exception):
    """Base class for exceptions raised by distillation terms."""

    error_code: DistillErrorCode = DistillErrorCode.DISTILL_ERROR

    def __init__(
        self,
        message: str = "An error occurred in a distillation term.",
    ):
        self.message = message

        super().__init__(self.message)


class DistillShapeMismatchError(DistillError):
    error_code: DistillErrorCode = DistillErrorCode.DISTILL_SHAPE_MISMATCH

    def __init__(
        self,
        message: str = "Teacher and student outputs must have the same shape.",
    ):
        super().__init__(message)


class InvalidTemperatureError(DistillError):
    error_code: DistillErrorCode = DistillErrorCode.DISTILL_INVALID_TEMPERATURE

    def __init__(
        self,
        temperature: float,
        message: str | None = None,
    ):
        super().__init__(message or f"Temperature must be > 0, got {temperature}.")
