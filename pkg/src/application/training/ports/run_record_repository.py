from abc import ABC
from abc import abstractmethod
from pathlib import Path

from src.application.training.run_record import RunRecord


class RunRecordRepository(ABC):
    """Port for training history persistence (one epoch per line)."""

    @abstractmethod
    def save(self, record: RunRecord, path: Path) -> None: ...

    @abstractmethod
    def load(self, path: Path) -> list[dict[str, object]]:
        """Read back the epoch lines of a record file."""
        ...
