from enum import StrEnum


class ModelErrorCode(StrEnum):
    MODEL_ERROR = "ModelError"
    MODEL_SHAPE_MISMATCH = "ModelShapeMismatch"
    MODEL_MISSING_GRADIENT = "ModelMissingGradient"
    MODEL_NON_FINITE_GRADIENT = "ModelNonFiniteGradient"
    MODEL_INVALID_VAL_LOSS = "ModelInvalidValLoss"
    MODEL_CHECKPOINT_MISMATCH = "ModelCheckpointMismatch"


class ModelError(Exception):
    """Base class for exceptions raised by the model kernel."""

    error_code: ModelErrorCode = ModelErrorCode.MODEL_ERROR

    def __init__(
        self,
        message: str = "An error occurred in the model kernel.",
    ):
        self.message = message

        super().__init__(self.message)


class ModelShapeMismatchError(ModelError):
    """Exception raised when inputs, gradients or layers do not chain."""

    error_code: ModelErrorCode = ModelErrorCode.MODEL_SHAPE_MISMATCH

    def __init__(
        self,
        message: str = "Shape mismatch.",
    ):
        super().__init__(message)


class MissingGradientError(ModelError):
    error_code: ModelErrorCode = ModelErrorCode.MODEL_MISSING_GRADIENT

    def __init__(
        self,
        message: str = "Backward needs a gradient for the embeddings or the logits.",
    ):
        super().__init__(message)


class NonFiniteGradientError(ModelError):
    """Exception raised when an optimizer step receives NaN or Inf gradients."""

    error_code: ModelErrorCode = ModelErrorCode.MODEL_NON_FINITE_GRADIENT

    def __init__(
        self,
        message: str = "Gradients contain non-finite values.",
    ):
        super().__init__(message)


class InvalidValLossError(ModelError):
    error_code: ModelErrorCode = ModelErrorCode.MODEL_INVALID_VAL_LOSS

    def __init__(
        self,
        val_loss: float,
        message: str | None = None,
    ):
        super().__init__(message or f"Validation loss must be finite, got {val_loss}.")


class CheckpointMismatchError(ModelError):
    """Exception raised when a checkpoint's parameters disagree with its manifest."""

    error_code: ModelErrorCode = ModelErrorCode.MODEL_CHECKPOINT_MISMATCH

    def __init__(
        self,
        message: str = "Checkpoint parameters do not match the manifest.",
    ):
        super().__init__(message)
