import numpy as np
import numpy.typing as npt

from src.domain.losses.bce import bce_multilabel
from src.domain.losses.errors import MisalignedDeltaError
from src.domain.losses.loss_result import LossResult
from src.domain.sampling.delta_weights import DeltaTransform
from src.domain.sampling.delta_weights import DeltaWeights


def ics_bce(
    logits: npt.ArrayLike,
    labels: npt.ArrayLike,
    delta: DeltaWeights,
    transform: DeltaTransform = DeltaTransform.SQRT,
) -> LossResult:
    """BCE with every (i, j) term, positive or negative, scaled by √δᵢʲ (or the chosen transform).

    Raises:
        MisalignedDeltaError: `delta` does not hold one row per batch sample
    """
    z = np.asarray(logits, dtype=np.float64)
    weights = delta.loss_weights(transform)
    if z.shape != weights.shape:
        raise MisalignedDeltaError(
            f"Delta rows have shape {weights.shape}, logits have {z.shape}."
        )
    return bce_multilabel(z, labels, weights)
