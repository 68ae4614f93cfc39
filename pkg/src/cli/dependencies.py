from src.application.data.use_cases.describe_dataset import DescribeDataset
from src.application.data.use_cases.generate_dataset import GenerateDataset
from src.application.data.use_cases.simulate_sampling import SimulateSampling
from src.application.evaluation.use_cases.aggregate_reports import AggregateReports
from src.application.evaluation.use_cases.evaluate_checkpoint import EvaluateCheckpoint
from src.application.training.use_cases.ablation_grid import AblationGrid
from src.application.training.use_cases.decoupling_study import DecouplingStudy
from src.application.training.use_cases.kd_study import KdStudy
from src.application.training.use_cases.run_pipeline import RunPhase
from src.application.training.use_cases.run_pipeline import RunPipeline
from src.infrastructure.files.repositories.checkpoint_repository import (
    FileCheckpointRepository,
)
from src.infrastructure.files.repositories.dataset_repository import FileDatasetRepository
from src.infrastructure.files.repositories.report_repository import FileReportRepository
from src.infrastructure.files.repositories.run_record_repository import (
    JsonLinesRunRecordRepository,
)
from src.infrastructure.logging.training_monitor import LoggingTrainingMonitor


def get_dataset_repository() -> FileDatasetRepository:
    return FileDatasetRepository()


def get_generate_dataset_use_case() -> GenerateDataset:
    return GenerateDataset(dataset_repository=get_dataset_repository())


def get_describe_dataset_use_case() -> DescribeDataset:
    return DescribeDataset(dataset_repository=get_dataset_repository())


def get_simulate_sampling_use_case() -> SimulateSampling:
    return SimulateSampling(
        dataset_repository=get_dataset_repository(),
        report_repository=FileReportRepository(),
    )


def get_run_pipeline_use_case() -> RunPipeline:
    """Pipeline wired to the file repositories and the logging monitor."""
    return RunPipeline(
        checkpoint_repository=FileCheckpointRepository(),
        run_record_repository=JsonLinesRunRecordRepository(),
        report_repository=FileReportRepository(),
        monitor=LoggingTrainingMonitor(),
    )


def get_run_phase_use_case() -> RunPhase:
    return RunPhase(
        checkpoint_repository=FileCheckpointRepository(),
        run_record_repository=JsonLinesRunRecordRepository(),
        monitor=LoggingTrainingMonitor(),
    )


def get_evaluate_checkpoint_use_case() -> EvaluateCheckpoint:
    return EvaluateCheckpoint(
        checkpoint_repository=FileCheckpointRepository(),
        dataset_repository=get_dataset_repository(),
        report_repository=FileReportRepository(),
    )


def get_aggregate_reports_use_case() -> AggregateReports:
    return AggregateReports(report_repository=FileReportRepository())


def get_ablation_grid_use_case() -> AblationGrid:
    return AblationGrid(
        pipeline=get_run_pipeline_use_case(),
        report_repository=FileReportRepository(),
    )


def get_kd_study_use_case() -> KdStudy:
    return KdStudy(
        pipeline=get_run_pipeline_use_case(),
        report_repository=FileReportRepository(),
    )


def get_decoupling_study_use_case() -> DecouplingStudy:
    return DecouplingStudy(
        pipeline=get_run_pipeline_use_case(),
        report_repository=FileReportRepository(),
    )
