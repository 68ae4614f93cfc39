from src.infrastructure.logging.logger import getLogger
from src.infrastructure.logging.run_context import RunContext
from src.infrastructure.logging.run_context import bind_run_context

__all__ = ["RunContext", "bind_run_context", "getLogger"]
