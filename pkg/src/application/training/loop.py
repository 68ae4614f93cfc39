import math
import time
from dataclasses import dataclass

from src.application.training.config import TrainConfig
from src.application.training.config import config_hash
from src.application.training.errors import TrainingDivergedError
from src.application.training.objectives import Objective
from src.application.training.objectives import TrainingView
from src.application.training.ports.training_monitor import TrainingMonitor
from src.application.training.run_record import EpochRecord
from src.application.training.run_record import RunRecord
from src.domain.model.adam import AdamState
from src.domain.model.adam import adam_step
from src.domain.model.lr_schedule import LrSchedule
from src.domain.model.lr_schedule import schedule_step
from src.domain.model.model_bundle import ModelBundle
from src.domain.sampling.batch_sampler import BatchSampler
from src.domain.sampling.batch_sampler import SamplerSpec


@dataclass(frozen=True, eq=False)
class PhaseResult:
    model: ModelBundle
    record: RunRecord
    step: int


def train_model(  # noqa: PLR0913
    phase: int,
    model: ModelBundle,
    objective: Objective,
    train: TrainingView,
    val: TrainingView,
    sampler_spec: SamplerSpec,
    cfg: TrainConfig,
    monitor: TrainingMonitor,
) -> PhaseResult:
    """Run `cfg.epochs` epochs of Adam over sampled batches.

    An epoch is ceil(n_train / b) batches. After each epoch the objective
    is evaluated on the whole validation view, the plateau schedule is
    stepped and the best-validation snapshot is kept.

    Raises:
        TrainingDivergedError: A batch loss, gradient or validation loss is not finite
    """
    started = time.perf_counter()
    sampler = BatchSampler(sampler_spec, train.labels)
    batches = math.ceil(sampler.n / sampler_spec.batch_size)
    schedule = LrSchedule(
        lr=cfg.lr_initial,
        factor=cfg.lr_factor,
        floor=cfg.lr_floor,
        patience=cfg.lr_patience,
    )
    state = AdamState.for_model(model)
    record = RunRecord(phase=phase, config_hash=config_hash(cfg))
    best_model, best_step, best_val = model, 0, math.inf
    since_best = 0
    monitor.phase_started(phase, cfg.epochs, batches)

    for epoch in range(1, cfg.epochs + 1):
        lr = schedule.lr
        total = 0.0
        for indices in sampler.epoch(batches):
            value, grads = objective.loss(model, train.rows(indices))
            if grads is None or not math.isfinite(value) or not grads.is_finite():
                raise TrainingDivergedError(phase, epoch)
            model, state = adam_step(state, model, grads, lr)
            total += value

        val_loss, _ = objective.loss(model, val, with_grad=False)
        if not math.isfinite(val_loss):
            raise TrainingDivergedError(phase, epoch)

        improved = val_loss < best_val
        if improved:
            best_model, best_step, best_val = model, state.step, val_loss
            since_best = 0
            record.best_epoch = epoch
        else:
            since_best += 1

        schedule = schedule_step(schedule, val_loss)
        epoch_record = EpochRecord(
            phase=phase,
            epoch=epoch,
            train_loss=total / batches,
            val_loss=val_loss,
            lr=lr,
            best_val_loss=best_val,
            improved=improved,
        )
        record.epochs.append(epoch_record)
        monitor.epoch_finished(epoch_record)
        if schedule.lr < lr:
            monitor.lr_reduced(phase, epoch, lr, schedule.lr)

        if cfg.early_stop_patience and since_best >= cfg.early_stop_patience:
            record.stopped_early = True
            monitor.early_stopped(phase, epoch)
            break

    record.wall_time_s = time.perf_counter() - started
    monitor.phase_finished(record)
    return PhaseResult(model=best_model, record=record, step=best_step)
