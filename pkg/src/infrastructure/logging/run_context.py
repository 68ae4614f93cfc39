from collections.abc import Iterator
from contextlib import contextmanager
from contextvars import ContextVar
from typing import Any

from pydantic import BaseModel
from pydantic import ConfigDict

# Holds the fields of the command currently running (set by the CLI and the trainer)
run_context_var: ContextVar[dict[str, Any]] = ContextVar(
    "run_context_var",
    default={},  # noqa: B039 Do not use mutable data structures for `ContextVar` defaults
)


class RunContext(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    command: str | None = None
    seed: int | None = None
    phase: int | None = None
    epoch: int | None = None


@contextmanager
def bind_run_context(**fields: Any) -> Iterator[RunContext]:
    """Merge `fields` into the run context for the duration of the block."""
    merged = RunContext.model_validate({**run_context_var.get(), **fields})
    token = run_context_var.set(merged.model_dump(exclude_none=True))
    try:
        yield merged
    finally:
        run_context_var.reset(token)
