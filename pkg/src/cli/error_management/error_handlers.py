from enum import StrEnum
from pydantic import BaseModel
from pydantic import ValidationError
from rich.console import Console

from src.application.training.errors import TrainingError
from src.cli.error_management.error_code import CliErrorCode
from src.cli.error_management.error_code import ErrorCode
from src.cli.error_management.usage_error import UsageError
from src.domain.dataset.errors import DatasetError
from src.domain.dataset.errors import InvalidThresholdsError
from src.domain.distill.errors import DistillError
from src.domain.evaluation.errors import EvaluationError
from src.domain.hierarchy.errors import HierarchyError
from src.domain.losses.errors import LossError
from src.domain.model.errors import ModelError
from src.domain.sampling.errors import SamplingError
from src.infrastructure.logging import getLogger

logger = getLogger(__name__, prefix="ErrorHandler")
stderr = Console(stderr=True, highlight=False, soft_wrap=True)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_RUNTIME = 2

DomainError = (
    HierarchyError,
    DatasetError,
    SamplingError,
    ModelError,
    LossError,
    DistillError,
    EvaluationError,
    TrainingError,
)


class ErrorResponseException(BaseModel):
    type: str
    message: str


class ErrorResponse(BaseModel):
    exit_code: int
    code: str
    message: str
    exceptions: list[ErrorResponseException]


def extract_exceptions(exception_group: ExceptionGroup[Exception]) -> list[Exception]:
    all_exceptions: list[Exception] = []
    for exception in exception_group.exceptions:
        if isinstance(exception, ExceptionGroup):
            all_exceptions.extend(extract_exceptions(exception))  # type: ignore
        else:
            all_exceptions.append(exception)
    return all_exceptions


def format_error_response(
    exit_code: int,
    error_code: StrEnum,
    message: str,
    exceptions: list[Exception] | list[ErrorResponseException],
    with_traceback: bool = False,
) -> int:
    """Print the one-line error summary to stderr and return `exit_code`.

    The structured response is logged at DEBUG so `LOG_LEVEL=DEBUG` adds the
    details (and the traceback of unexpected errors) without repeating the
    summary at the default level.
    """
    error_response = ErrorResponse(
        exit_code=exit_code,
        code=ErrorCode(error_code.value),
        message=message,
        exceptions=[
            ErrorResponseException(type=exception.__class__.__name__, message=str(exception))
            for exception in exceptions
            if isinstance(exception, Exception)
        ]
        + [exception for exception in exceptions if isinstance(exception, ErrorResponseException)],
    )

    logger.debug(
        f"{error_code.name} {message}",
        exc_info=with_traceback,
        extra={"error_response": error_response.model_dump()},
    )
    stderr.print(f"error [{error_code}]: {message}", markup=False)
    if len(error_response.exceptions) > 1:
        for detail in error_response.exceptions:
            stderr.print(f"  - {detail.type}: {detail.message}", markup=False)
    return exit_code


def validation_exception_handler(exception: ValidationError) -> int:
    details = [
        ErrorResponseException(
            type="".join(map(str.capitalize, error["type"].split("_"))),
            message=f"{'.'.join(str(loc) for loc in error['loc'])}: {error['msg']}",
        )
        for error in exception.errors()
    ]
    return format_error_response(
        exit_code=EXIT_USAGE,
        error_code=CliErrorCode.CLI_INVALID_CONFIG,
        message="; ".join(detail.message for detail in details),
        exceptions=details,
    )


def handle_exception(exception: Exception) -> int:
    """Log `exception` and map it to the process exit code."""
    match exception:
        case UsageError():
            return format_error_response(
                EXIT_USAGE, CliErrorCode.CLI_USAGE, exception.message, [exception]
            )
        case ValidationError():
            return validation_exception_handler(exception)
        case InvalidThresholdsError():
            return format_error_response(
                EXIT_USAGE, exception.error_code, exception.message, [exception]
            )
        case ExceptionGroup():
            leaves = extract_exceptions(exception)  # type: ignore [reportUnknownArgumentType]
            code = getattr(leaves[0], "error_code", CliErrorCode.CLI_INTERNAL)
            return format_error_response(EXIT_RUNTIME, code, str(exception), leaves)
        case _ if isinstance(exception, DomainError):
            return format_error_response(
                EXIT_RUNTIME,
                exception.error_code,  # type: ignore [reportAttributeAccessIssue]
                exception.message,  # type: ignore [reportAttributeAccessIssue]
                [exception],
            )
        case FileNotFoundError():
            return format_error_response(
                EXIT_RUNTIME, CliErrorCode.CLI_FILE_NOT_FOUND, str(exception), [exception]
            )
        case _:
            return format_error_response(
                EXIT_RUNTIME,
                CliErrorCode.CLI_INTERNAL,
                str(exception),
                [exception],
                with_traceback=True,
            )
