import csv
import io
from collections.abc import Sequence
from pathlib import Path

from pydantic import BaseModel

from src.application.evaluation.ports.report_repository import CsvCell
from src.application.evaluation.ports.report_repository import ReportRepository
from src.domain.evaluation.eval_report import EvalReport
from src.infrastructure.files.json_codec import write_bytes
from src.infrastructure.files.json_codec import write_json


def format_cell(value: CsvCell) -> str:
    match value:
        case None:
            return ""
        case bool():
            return str(int(value))
        case float():
            return f"{value:.6f}"
        case _:
            return str(value)


class FileReportRepository(ReportRepository):
    def save_report(self, report: EvalReport, path: Path) -> None:
        write_json(path, report)

    def load_report(self, path: Path) -> EvalReport:
        return EvalReport.model_validate_json(path.read_bytes())

    def find_reports(self, root: Path, pattern: str) -> list[Path]:
        return sorted(root.glob(pattern))

    def save_table(
        self, header: Sequence[str], rows: Sequence[Sequence[CsvCell]], path: Path
    ) -> None:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(header)
        writer.writerows([format_cell(cell) for cell in row] for row in rows)
        self.save_text(buffer.getvalue(), path)

    def save_text(self, text: str, path: Path) -> None:
        write_bytes(path, text.encode())

    def save_document(self, document: BaseModel, path: Path) -> None:
        write_json(path, document)
