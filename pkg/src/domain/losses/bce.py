import numpy as np
import numpy.typing as npt
from scipy.special import expit
from scipy.special import log_expit

from src.domain.common.arrays import FloatArray
from src.domain.losses.errors import LossShapeMismatchError
from src.domain.losses.errors import NegativeWeightError
from src.domain.losses.loss_result import LossResult


def bce_elementwise(logits: FloatArray, labels: FloatArray) -> FloatArray:
    """−[y·log σ(z) + (1−y)·log(1−σ(z))] through log-sigmoid, so saturated logits never hit log(0)."""
    return -(labels * log_expit(logits) + (1.0 - labels) * log_expit(-logits))


def bce_multilabel(
    logits: npt.ArrayLike,
    labels: npt.ArrayLike,
    weights: npt.ArrayLike | None = None,
) -> LossResult:
    """Mean binary cross-entropy over batch and classes, normalized by 1/(k·B).

    Raises:
        LossShapeMismatchError: Logits, labels or weights disagree in shape
        NegativeWeightError: A weight is negative
    """
    z = np.asarray(logits, dtype=np.float64)
    y = np.asarray(labels, dtype=np.float64)
    if z.ndim != 2 or y.shape != z.shape:  # noqa: PLR2004
        raise LossShapeMismatchError(
            f"Logits {z.shape} and labels {y.shape} must be the same batch×k shape."
        )
    if weights is None:
        w = np.ones_like(z)
    else:
        w = np.asarray(weights, dtype=np.float64)
        if w.shape != z.shape:
            raise LossShapeMismatchError(
                f"Weights {w.shape} do not match logits {z.shape}."
            )
        if (w < 0).any():
            raise NegativeWeightError()

    batch, k = z.shape
    norm = 1.0 / (k * batch)
    value = float((w * bce_elementwise(z, y)).sum() * norm)
    grad = w * (expit(z) - y) * norm
    return LossResult(value=value, dlogits=grad)
