import logging
import os
from collections.abc import MutableMapping
from typing import Any

from rich.console import Console
from rich.logging import RichHandler

from src.infrastructure.logging.run_context import run_context_var


class RunContextFilter(logging.Filter):
    def filter(self, record: logging.LogRecord) -> bool:
        json_fields_data: MutableMapping[str, Any] = getattr(record, "json_fields", {})
        json_fields_data.update(run_context_var.get({}))

        record.json_fields = json_fields_data
        return True


class RunContextFormatter(logging.Formatter):
    """Appends the bound run context to the message, e.g. `Phase 2 done (command=train seed=0)`."""

    def formatMessage(self, record: logging.LogRecord) -> str:
        message = super().formatMessage(record)
        fields: MutableMapping[str, Any] = getattr(record, "json_fields", {})
        if not fields:
            return message
        context = " ".join(f"{key}={value}" for key, value in fields.items())
        return f"{message} ({context})"


class PrefixAdapter(logging.LoggerAdapter):  # type: ignore [reportMissingTypeArgument]
    def __init__(self, prefix: str | None = None, *args, **kwargs) -> None:  # type: ignore [reportUnknownParameterType, reportMissingParameterType]
        super().__init__(*args, **kwargs)  # type: ignore [reportUnknownMemberType, reportUnknownArgumentType]
        self.prefix: str | None = prefix

    def process(
        self, msg: str, kwargs: MutableMapping[str, Any]
    ) -> tuple[Any, MutableMapping[str, Any]]:
        if self.prefix:
            return f"[{self.prefix}] {msg}", kwargs
        return msg, kwargs


def getLogger(name: str | None = None, prefix: str | None = None) -> PrefixAdapter:
    logger = logging.getLogger(name)
    logger.propagate = False

    log_level = os.getenv("LOG_LEVEL", "INFO").upper()
    logger.setLevel(getattr(logging, log_level, logging.INFO))

    if not logger.hasHandlers():
        # Logs go to stderr so command output on stdout stays clean.
        handler = RichHandler(console=Console(stderr=True))
        handler.setFormatter(RunContextFormatter("%(message)s"))
        handler.setLevel(logging.DEBUG)  # the logger decides what is shown
        logger.addHandler(handler)

    if not any(isinstance(f, RunContextFilter) for f in logger.filters):
        logger.addFilter(RunContextFilter())

    return PrefixAdapter(
        prefix=prefix,
        logger=logger,
    )