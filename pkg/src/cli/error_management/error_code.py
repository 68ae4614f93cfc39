from enum import StrEnum

from src.application.training.errors import TrainingErrorCode
from src.domain.dataset.errors import DatasetErrorCode
from src.domain.distill.errors import DistillErrorCode
from src.domain.evaluation.errors import EvaluationErrorCode
from src.domain.hierarchy.errors import HierarchyErrorCode
from src.domain.losses.errors import LossErrorCode
from src.domain.model.errors import ModelErrorCode
from src.domain.sampling.errors import SamplingErrorCode
from src.helpers.enum import merge_str_enums


class CliErrorCode(StrEnum):
    CLI_USAGE = "UsageError"
    CLI_INVALID_CONFIG = "InvalidConfig"
    CLI_FILE_NOT_FOUND = "FileNotFound"
    CLI_INTERNAL = "InternalError"


ErrorCode = merge_str_enums(
    "ErrorCode",
    CliErrorCode,
    HierarchyErrorCode,
    DatasetErrorCode,
    SamplingErrorCode,
    ModelErrorCode,
    LossErrorCode,
    DistillErrorCode,
    EvaluationErrorCode,
    TrainingErrorCode,
)
