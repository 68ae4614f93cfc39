from pydantic import BaseModel
from pydantic import ConfigDict
from pydantic import Field


class EpochRecord(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    phase: int
    epoch: int = Field(..., ge=1)
    train_loss: float
    val_loss: float
    lr: float
    best_val_loss: float
    improved: bool


class RunRecord(BaseModel):
    """Training history of one phase.

    `wall_time_s` is kept for logging and never serialized, so written
    records are byte-identical across identical runs.
    """

    model_config = ConfigDict(extra="forbid")

    phase: int
    config_hash: str
    epochs: list[EpochRecord] = Field(default_factory=list)
    best_epoch: int = 0
    stopped_early: bool = False
    wall_time_s: float = Field(0.0, exclude=True)

    @property
    def best_val_loss(self) -> float:
        return self.epochs[self.best_epoch - 1].val_loss

    @property
    def lr_trace(self) -> list[float]:
        return [epoch.lr for epoch in self.epochs]
