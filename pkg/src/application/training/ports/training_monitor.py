from abc import ABC
from abc import abstractmethod

from src.application.training.run_record import EpochRecord
from src.application.training.run_record import RunRecord


class TrainingMonitor(ABC):
    """Port receiving training progress events."""

    @abstractmethod
    def phase_started(self, phase: int, epochs: int, batches_per_epoch: int) -> None: ...

    @abstractmethod
    def epoch_finished(self, record: EpochRecord) -> None: ...

    @abstractmethod
    def lr_reduced(self, phase: int, epoch: int, old_lr: float, new_lr: float) -> None: ...

    @abstractmethod
    def early_stopped(self, phase: int, epoch: int) -> None: ...

    @abstractmethod
    def phase_finished(self, record: RunRecord) -> None: ...


class SilentTrainingMonitor(TrainingMonitor):
    """Monitor that ignores every event."""

    def phase_started(self, phase: int, epochs: int, batches_per_epoch: int) -> None:
        pass

    def epoch_finished(self, record: EpochRecord) -> None:
        pass

    def lr_reduced(self, phase: int, epoch: int, old_lr: float, new_lr: float) -> None:
        pass

    def early_stopped(self, phase: int, epoch: int) -> None:
        pass

    def phase_finished(self, record: RunRecord) -> None:
        pass
