from dataclasses import dataclass
from dataclasses import field
from enum import StrEnum

import numpy as np
import numpy.typing as npt

from src.domain.common.arrays import BinaryArray
from src.domain.common.arrays import FloatArray
from src.domain.common.arrays import as_binary_matrix
from src.domain.sampling.errors import AllNegativeRowError
from src.domain.sampling.errors import EmptyLabelsError
from src.domain.sampling.errors import ZeroCountClassError


class DeltaTransform(StrEnum):
    """How δ is turned into a loss multiplier."""

    SQRT = "sqrt"
    SQUARE = "square"
    IDENTITY = "identity"


@dataclass(frozen=True, eq=False)
class DeltaWeights:
    """Per-(sample, class) re-balancing factors, all in (0, 1]."""

    delta: FloatArray
    sqrt_delta: FloatArray = field(init=False)

    def __post_init__(self) -> None:
        delta = np.array(self.delta, dtype=np.float64)
        if delta.ndim != 2:  # noqa: PLR2004
            raise ValueError(f"delta must be 2-D, got shape {delta.shape}")
        sqrt_delta = np.sqrt(delta)
        delta.setflags(write=False)
        sqrt_delta.setflags(write=False)
        object.__setattr__(self, "delta", delta)
        object.__setattr__(self, "sqrt_delta", sqrt_delta)

    @property
    def shape(self) -> tuple[int, int]:
        return (int(self.delta.shape[0]), int(self.delta.shape[1]))

    def rows(self, indices: npt.ArrayLike) -> "DeltaWeights":
        """δ rows aligned to a drawn batch."""
        return DeltaWeights(self.delta[np.asarray(indices)])

    def loss_weights(self, transform: DeltaTransform = DeltaTransform.SQRT) -> FloatArray:
        match transform:
            case DeltaTransform.SQRT:
                return self.sqrt_delta
            case DeltaTransform.SQUARE:
                return np.square(self.delta)
            case DeltaTransform.IDENTITY:
                return self.delta


def class_route_probabilities(
    labels: BinaryArray, class_counts: npt.ArrayLike | None = None
) -> FloatArray:
    """Probability pᵢʲ = (1/k) / N_j that a class-balanced draw reaches a given sample via class j.

    `class_counts` replaces the N_j counted on `labels`, e.g. the training
    counts when weighting a held-out split.
    """
    k = labels.shape[1]
    if class_counts is None:
        counts = labels.sum(axis=0, dtype=np.int64)
    else:
        counts = np.asarray(class_counts, dtype=np.int64)
        if counts.shape != (k,):
            raise ValueError(f"class_counts must have shape ({k},), got {counts.shape}")
    empty = np.flatnonzero(counts == 0)
    if empty.size:
        raise ZeroCountClassError(int(empty[0]))
    return (1.0 / k) / counts.astype(np.float64)


def compute_delta(labels: npt.ArrayLike, class_counts: npt.ArrayLike | None = None) -> DeltaWeights:
    """Instance-wise class-balanced factors δᵢʲ = pᵢʲ / pᵢᴬ.

    pᵢᴬ sums pᵢʲ over the positive labels of sample i, i.e. its total
    draw probability under class-balanced sampling. Positive entries use
    the ratio as is; negative entries are capped at 1 so every factor
    stays in (0, 1]. Class counts default to those of `labels`.

    Raises:
        ZeroCountClassError: A class has no positive sample
        AllNegativeRowError: A sample has no positive label
    """
    matrix = as_binary_matrix(labels)
    if matrix.shape[0] == 0 or matrix.shape[1] == 0:
        raise EmptyLabelsError()

    empty_rows = np.flatnonzero(matrix.sum(axis=1) == 0)
    if empty_rows.size:
        raise AllNegativeRowError(int(empty_rows[0]))

    p_route = class_route_probabilities(matrix, class_counts)
    positive = matrix.astype(bool)
    p_instance = np.where(positive, p_route, 0.0).sum(axis=1)
    ratio = p_route[None, :] / p_instance[:, None]
    return DeltaWeights(np.where(positive, ratio, np.minimum(ratio, 1.0)))
