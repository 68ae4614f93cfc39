import math
from dataclasses import dataclass
from dataclasses import replace

from src.domain.model.errors import InvalidValLossError

DEFAULT_LR = 1e-3
DEFAULT_FACTOR = 0.1
DEFAULT_FLOOR = 1e-7
DEFAULT_PATIENCE = 5
IMPROVEMENT_TOLERANCE = 1e-8


@dataclass(frozen=True)
class LrSchedule:
    """Reduce-on-plateau learning rate driven by validation loss."""

    lr: float = DEFAULT_LR
    factor: float = DEFAULT_FACTOR
    floor: float = DEFAULT_FLOOR
    patience: int = DEFAULT_PATIENCE
    best_val_loss: float = math.inf
    epochs_since_improvement: int = 0

    def __post_init__(self) -> None:
        if not 0.0 < self.factor < 1.0:
            raise ValueError(f"factor must be in (0, 1), got {self.factor}")
        if self.patience < 1:
            raise ValueError(f"patience must be >= 1, got {self.patience}")
        if not 0.0 < self.floor <= self.lr:
            raise ValueError(f"Need 0 < floor <= lr, got floor={self.floor}, lr={self.lr}")


def schedule_step(sched: LrSchedule, val_loss: float) -> LrSchedule:
    """Record one epoch's validation loss.

    Improvement means `val_loss < best - 1e-8`. After `patience`
    consecutive epochs without improvement the rate is multiplied by
    `factor` (never below `floor`) and the counter restarts.
    """
    if not math.isfinite(val_loss):
        raise InvalidValLossError(val_loss)

    if val_loss < sched.best_val_loss - IMPROVEMENT_TOLERANCE:
        return replace(sched, best_val_loss=val_loss, epochs_since_improvement=0)

    waited = sched.epochs_since_improvement + 1
    if waited >= sched.patience:
        return replace(
            sched,
            lr=max(sched.lr * sched.factor, sched.floor),
            epochs_since_improvement=0,
        )
    return replace(sched, epochs_since_improvement=waited)
