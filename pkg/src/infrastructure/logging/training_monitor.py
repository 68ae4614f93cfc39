from src.application.training.ports.training_monitor import TrainingMonitor
from src.application.training.run_record import EpochRecord
from src.application.training.run_record import RunRecord
from src.infrastructure.logging.logger import getLogger
from src.infrastructure.logging.run_context import bind_run_context

logger = getLogger(__name__, prefix="Trainer")


class LoggingTrainingMonitor(TrainingMonitor):
    """Reports training progress through the application logger."""

    def phase_started(self, phase: int, epochs: int, batches_per_epoch: int) -> None:
        with bind_run_context(phase=phase):
            logger.info(
                f"Phase {phase}: {epochs} epochs of {batches_per_epoch} batches"
            )

    def epoch_finished(self, record: EpochRecord) -> None:
        with bind_run_context(phase=record.phase, epoch=record.epoch):
            logger.info(
                f"Phase {record.phase} epoch {record.epoch}: "
                f"train={record.train_loss:.6f} val={record.val_loss:.6f} lr={record.lr:.2e}"
                + (" *" if record.improved else ""),
                extra={"epoch_record": record.model_dump()},
            )

    def lr_reduced(self, phase: int, epoch: int, old_lr: float, new_lr: float) -> None:
        with bind_run_context(phase=phase, epoch=epoch):
            logger.warning(f"Phase {phase} epoch {epoch}: lr {old_lr:.2e} -> {new_lr:.2e}")

    def early_stopped(self, phase: int, epoch: int) -> None:
        with bind_run_context(phase=phase, epoch=epoch):
            logger.warning(f"Phase {phase}: early stop after epoch {epoch}")

    def phase_finished(self, record: RunRecord) -> None:
        with bind_run_context(phase=record.phase):
            logger.info(
                f"Phase {record.phase} done in {record.wall_time_s:.1f}s, "
                f"best epoch {record.best_epoch} (val={record.best_val_loss:.6f})"
            )
