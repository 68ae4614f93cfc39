from abc import ABC
from abc import abstractmethod
from collections.abc import Sequence
from pathlib import Path

from pydantic import BaseModel

from src.domain.evaluation.eval_report import EvalReport

CsvCell = str | int | float | None


class ReportRepository(ABC):
    """Port for report, table and manifest files."""

    @abstractmethod
    def save_report(self, report: EvalReport, path: Path) -> None: ...

    @abstractmethod
    def load_report(self, path: Path) -> EvalReport:
        """Read a report file.

        Raises:
            FileNotFoundError: If `path` does not exist
        """
        ...

    @abstractmethod
    def find_reports(self, root: Path, pattern: str) -> list[Path]:
        """Report files under `root` matching a glob `pattern`, sorted by path."""
        ...

    @abstractmethod
    def save_table(
        self, header: Sequence[str], rows: Sequence[Sequence[CsvCell]], path: Path
    ) -> None: ...

    @abstractmethod
    def save_text(self, text: str, path: Path) -> None: ...

    @abstractmethod
    def save_document(self, document: BaseModel, path: Path) -> None:
        """Write any pydantic document as JSON (manifests, summaries)."""
        ...
