class UsageError(Exception):
    """Invalid command line: unknown flag, missing argument or unreadable config file."""

    def __init__(self, message: str = "Invalid command line.") -> None:
        self.message = message
        super().__init__(self.message)
