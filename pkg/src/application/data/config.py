from pathlib import Path

from pydantic import BaseModel
from pydantic import ConfigDict
from pydantic import Field
from pydantic import model_validator

DEFAULT_FANOUTS = (4, 3)


class SynthSettings(BaseModel):
    """gen-data configuration file.

    The hierarchy is either loaded from `hierarchy` or, when that is unset,
    built as a balanced tree from `fanouts`.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    n: int = Field(6000, ge=1)
    k: int = Field(24, ge=2)
    d: int = Field(32, ge=1)
    target_rho: float = Field(100.0, ge=1.0)
    cooccur_rate: float = Field(0.2, ge=0.0, lt=1.0)
    noise_sigma: float = Field(1.0, gt=0.0)
    fanouts: tuple[int, ...] = DEFAULT_FANOUTS
    hierarchy: Path | None = None
    sibling_bias: float = Field(0.75, ge=0.0, le=1.0)
    split_fractions: tuple[float, float, float] = (0.6, 0.2, 0.2)
    seed: int = Field(0, ge=0)

    @model_validator(mode="after")
    def _check_fanouts(self) -> "SynthSettings":
        if self.hierarchy is None and not self.fanouts:
            raise ValueError("Either fanouts or hierarchy must be given")
        return self
