from dataclasses import dataclass

from src.domain.common.arrays import FloatArray


@dataclass(frozen=True, eq=False)
class KdResult:
    """Distillation term value and its gradient with respect to the student output."""

    value: float
    grad: FloatArray
