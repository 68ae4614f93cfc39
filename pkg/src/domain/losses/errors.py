from enum import StrEnum


class LossErrorCode(StrEnum):
    LOSS_ERROR = "LossError"
    LOSS_SHAPE_MISMATCH = "LossShapeMismatch"
    LOSS_NEGATIVE_WEIGHT = "LossNegativeWeight"
    LOSS_MISALIGNED_DELTA = "LossMisalignedDelta"
    LOSS_TREE_MISMATCH = "LossTreeMismatch"
    LOSS_LEVEL_WIDTH_MISMATCH = "LossLevelWidthMismatch"


class LossError(Exception):
    """Base class for exceptions raised while evaluating a loss."""

    error_code: LossErrorCode = LossErrorCode.LOSS_ERROR

    def __init__(
        self,
        message: str = "An error occurred while evaluating a loss.",
    ):
        self.message = message

        super().__init__(self.message)


class LossShapeMismatchError(LossError):
    error_code: LossErrorCode = LossErrorCode.LOSS_SHAPE_MISMATCH

    def __init__(
        self,
        message: str = "Logits, labels and weights must share one batch×k shape.",
    ):
        super().__init__(message)


class NegativeWeightError(LossError):
    error_code: LossErrorCode = LossErrorCode.LOSS_NEGATIVE_WEIGHT

    def __init__(
        self,
        message: str = "Loss weights must be nonnegative.",
    ):
        super().__init__(message)


class MisalignedDeltaError(LossError):
    """Exception raised when δ rows do not line up with the batch."""

    error_code: LossErrorCode = LossErrorCode.LOSS_MISALIGNED_DELTA

    def __init__(
        self,
        message: str = "Delta weights are not aligned with the batch.",
    ):
        super().__init__(message)


class TreeMismatchError(LossError):
    error_code: LossErrorCode = LossErrorCode.LOSS_TREE_MISMATCH

    def __init__(
        self,
        message: str = "Hierarchy leaf count does not match the label width.",
    ):
        super().__init__(message)


class LevelWidthMismatchError(LossError):
    """Exception raised when a per-level head does not match its level's node count."""

    error_code: LossErrorCode = LossErrorCode.LOSS_LEVEL_WIDTH_MISMATCH

    def __init__(
        self,
        message: str = "Per-level logits do not match the hierarchy.",
    ):
        super().__init__(message)
