from dataclasses import dataclass

from src.domain.common.arrays import FloatArray


@dataclass(frozen=True, eq=False)
class LossResult:
    """Scalar loss and its gradient with respect to the leaf logits.

    `per_level_values` lists level 1 first. `dlevel_logits` holds the
    gradients of separate level heads (levels 2..M) when the loss has them.
    """

    value: float
    dlogits: FloatArray
    per_level_values: tuple[float, ...] | None = None
    dlevel_logits: tuple[FloatArray, ...] | None = None
