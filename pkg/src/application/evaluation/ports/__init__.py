from src.application.evaluation.ports.report_repository import CsvCell
from src.application.evaluation.ports.report_repository import ReportRepository

__all__ = ["CsvCell", "ReportRepository"]
