from enum import StrEnum


class DatasetErrorCode(StrEnum):
    DATASET_ERROR = "DatasetError"
    DATASET_INVALID = "DatasetInvalid"
    DATASET_EMPTY_CLASS = "DatasetEmptyClass"
    DATASET_INVALID_THRESHOLDS = "DatasetInvalidThresholds"
    DATASET_INFEASIBLE_CONFIG = "DatasetInfeasibleConfig"
    DATASET_SHAPE_MISMATCH = "DatasetShapeMismatch"
    DATASET_TRUNCATED = "DatasetTruncated"


class DatasetError(Exception):
    """Base class for exceptions for dataset operations."""

    error_code: DatasetErrorCode = DatasetErrorCode.DATASET_ERROR

    def __init__(
        self,
        message: str = "An error occurred during dataset operation.",
    ):
        self.message = message

        super().__init__(self.message)


class InvalidDatasetError(DatasetError):
    """Exception raised when a dataset breaks one of its invariants."""

    error_code: DatasetErrorCode = DatasetErrorCode.DATASET_INVALID

    def __init__(
        self,
        message: str = "Dataset is invalid.",
    ):
        super().__init__(message)


class EmptyClassError(DatasetError):
    """Exception raised when a class has no positive sample."""

    error_code: DatasetErrorCode = DatasetErrorCode.DATASET_EMPTY_CLASS

    def __init__(
        self,
        class_id: int,
        message: str | None = None,
    ):
        self.class_id = class_id
        super().__init__(message or f"Class {class_id} has no positive sample.")


class InvalidThresholdsError(DatasetError):
    """Exception raised when shot-group thresholds are not strictly ordered."""

    error_code: DatasetErrorCode = DatasetErrorCode.DATASET_INVALID_THRESHOLDS

    def __init__(
        self,
        message: str = "Group thresholds must satisfy t_many > t_few >= 1.",
    ):
        super().__init__(message)


class InfeasibleConfigError(DatasetError):
    """Exception raised when a synthetic configuration cannot be realized."""

    error_code: DatasetErrorCode = DatasetErrorCode.DATASET_INFEASIBLE_CONFIG

    def __init__(
        self,
        message: str = "Synthetic dataset configuration is infeasible.",
    ):
        super().__init__(message)


class ShapeMismatchError(DatasetError):
    """Exception raised when stored arrays disagree with the manifest."""

    error_code: DatasetErrorCode = DatasetErrorCode.DATASET_SHAPE_MISMATCH

    def __init__(
        self,
        message: str = "Dataset files do not match the manifest shape.",
    ):
        super().__init__(message)


class TruncatedDatasetError(DatasetError):
    """Exception raised when a dataset file is empty or shorter than expected."""

    error_code: DatasetErrorCode = DatasetErrorCode.DATASET_TRUNCATED

    def __init__(
        self,
        message: str = "Dataset file is truncated.",
    ):
        super().__init__(message)
