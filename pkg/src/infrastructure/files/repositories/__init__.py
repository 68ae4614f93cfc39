from src.infrastructure.files.repositories.checkpoint_repository import FileCheckpointRepository
from src.infrastructure.files.repositories.dataset_repository import FileDatasetRepository
from src.infrastructure.files.repositories.report_repository import FileReportRepository
from src.infrastructure.files.repositories.run_record_repository import (
    JsonLinesRunRecordRepository,
)

__all__ = [
    "FileCheckpointRepository",
    "FileDatasetRepository",
    "FileReportRepository",
    "JsonLinesRunRecordRepository",
]
