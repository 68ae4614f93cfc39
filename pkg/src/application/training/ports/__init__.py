from src.application.training.ports.checkpoint_repository import CheckpointRepository
from src.application.training.ports.run_record_repository import RunRecordRepository
from src.application.training.ports.training_monitor import SilentTrainingMonitor
from src.application.training.ports.training_monitor import TrainingMonitor

__all__ = [
    "CheckpointRepository",
    "RunRecordRepository",
    "SilentTrainingMonitor",
    "TrainingMonitor",
]
