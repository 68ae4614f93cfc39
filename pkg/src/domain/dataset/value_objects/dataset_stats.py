import numpy as np
import numpy.typing as npt
from pydantic import BaseModel
from pydantic import ConfigDict
from pydantic import Field

from src.domain.dataset.errors import EmptyClassError
from src.domain.dataset.errors import InvalidDatasetError


class DatasetStats(BaseModel):
    """Imbalance statistics of a label matrix."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    rho: float = Field(..., ge=1.0, description="Imbalance ratio max count / min count")
    lcard: float = Field(..., description="Label cardinality, mean positives per sample")
    class_counts: tuple[int, ...]
    sorted_class_order: tuple[int, ...] = Field(
        ..., description="Class ids by decreasing count, ties by ascending id"
    )


def compute_stats(labels: npt.ArrayLike) -> DatasetStats:
    """Compute rho, L_Card and the frequency order of a binary label matrix.

    Raises:
        InvalidDatasetError: If the matrix is empty or not 2-D
        EmptyClassError: If a class has no positive (rho undefined)
    """
    matrix = np.asarray(labels)
    if matrix.ndim != 2 or matrix.shape[0] == 0 or matrix.shape[1] == 0:  # noqa: PLR2004
        raise InvalidDatasetError(f"Label matrix must be non-empty 2-D, got {matrix.shape}.")

    counts = matrix.sum(axis=0, dtype=np.int64)
    empty = np.flatnonzero(counts == 0)
    if empty.size:
        raise EmptyClassError(int(empty[0]))

    return DatasetStats(
        rho=float(counts.max()) / float(counts.min()),
        lcard=float(counts.sum()) / float(matrix.shape[0]),
        class_counts=tuple(int(c) for c in counts),
        sorted_class_order=tuple(int(j) for j in np.argsort(-counts, kind="stable")),
    )
