from enum import StrEnum


class SamplingErrorCode(StrEnum):
    SAMPLING_ERROR = "SamplingError"
    SAMPLING_ZERO_COUNT_CLASS = "SamplingZeroCountClass"
    SAMPLING_ALL_NEGATIVE_ROW = "SamplingAllNegativeRow"
    SAMPLING_EMPTY_LABELS = "SamplingEmptyLabels"
    SAMPLING_INVALID_DRAWS = "SamplingInvalidDraws"


class SamplingError(Exception):
    """Base class for exceptions for sampling operations."""

    error_code: SamplingErrorCode = SamplingErrorCode.SAMPLING_ERROR

    def __init__(
        self,
        message: str = "An error occurred during sampling.",
    ):
        self.message = message

        super().__init__(self.message)


class ZeroCountClassError(SamplingError):
    """Exception raised when a class has no positive sample to draw from."""

    error_code: SamplingErrorCode = SamplingErrorCode.SAMPLING_ZERO_COUNT_CLASS

    def __init__(
        self,
        class_id: int,
        message: str | None = None,
    ):
        self.class_id = class_id
        super().__init__(message or f"Class {class_id} has no positive sample.")


class AllNegativeRowError(SamplingError):
    """Exception raised when a sample carries no positive label."""

    error_code: SamplingErrorCode = SamplingErrorCode.SAMPLING_ALL_NEGATIVE_ROW

    def __init__(
        self,
        row: int,
        message: str | None = None,
    ):
        self.row = row
        super().__init__(message or f"Sample {row} has no positive label.")


class EmptyLabelsError(SamplingError):
    error_code: SamplingErrorCode = SamplingErrorCode.SAMPLING_EMPTY_LABELS

    def __init__(
        self,
        message: str = "Cannot sample from an empty label matrix.",
    ):
        super().__init__(message)


class InvalidDrawsError(SamplingError):
    error_code: SamplingErrorCode = SamplingErrorCode.SAMPLING_INVALID_DRAWS

    def __init__(
        self,
        draws: int,
        message: str | None = None,
    ):
        super().__init__(message or f"Number of draws must be >= 1, got {draws}.")
