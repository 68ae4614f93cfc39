from enum import StrEnum

from pydantic import BaseModel
from pydantic import ConfigDict
from pydantic import Field
from pydantic import model_validator


class KlVariant(StrEnum):
    FULL_BINARY = "full_binary"
    LITERAL = "literal"


class KdConfig(BaseModel):
    """Weights of the hybrid distillation objective."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    alpha: float = Field(0.2, ge=0.0, le=0.5, description="Feature-KD share")
    beta: float = Field(0.2, ge=0.0, le=0.5, description="Logits-KD share")
    gamma: float = Field(10.0, gt=0.0, description="Feature-KD scale")
    temperature: float = Field(3.0, gt=0.0)
    kl_variant: KlVariant = KlVariant.FULL_BINARY

    @model_validator(mode="after")
    def _check_shares(self) -> "KdConfig":
        if self.alpha + self.beta > 1.0:
            raise ValueError("alpha + beta must not exceed 1")
        return self
