from src.cli.error_management.error_handlers import EXIT_OK
from src.cli.error_management.error_handlers import EXIT_RUNTIME
from src.cli.error_management.error_handlers import EXIT_USAGE
from src.cli.error_management.error_handlers import handle_exception
from src.cli.error_management.usage_error import UsageError

__all__ = ["EXIT_OK", "EXIT_RUNTIME", "EXIT_USAGE", "UsageError", "handle_exception"]
