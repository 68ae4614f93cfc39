from collections.abc import Iterator
from enum import StrEnum

import numpy as np
import numpy.typing as npt
from pydantic import BaseModel
from pydantic import ConfigDict
from pydantic import Field

from src.domain.common.arrays import IndexArray
from src.domain.common.arrays import as_binary_matrix
from src.domain.sampling.errors import EmptyLabelsError
from src.domain.sampling.errors import ZeroCountClassError


class SamplerKind(StrEnum):
    INSTANCE_BALANCED = "instance_balanced"
    CLASS_BALANCED = "class_balanced"


class SamplerSpec(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    kind: SamplerKind
    batch_size: int = Field(..., ge=1)
    seed: int = Field(..., ge=0)


class BatchSampler:
    """Stateful batch drawer; one owner per instance.

    instance_balanced: every sample has probability 1/n per draw.
    class_balanced: a class is drawn uniformly, then one of its positive
    samples uniformly, so a sample's probability is the sum of its
    (1/k)/N_j routes.
    """

    def __init__(self, spec: SamplerSpec, labels: npt.ArrayLike) -> None:
        matrix = as_binary_matrix(labels)
        if matrix.shape[0] == 0 or matrix.shape[1] == 0:
            raise EmptyLabelsError()

        self._spec = spec
        self._n = int(matrix.shape[0])
        self._rng = np.random.default_rng(spec.seed)

        # Positive sample ids of every class, concatenated column by column.
        self._counts = matrix.sum(axis=0, dtype=np.int64)
        self._members = np.nonzero(matrix.T)[1].astype(np.int64)
        self._starts = np.concatenate(([0], np.cumsum(self._counts)[:-1]))
        if spec.kind is SamplerKind.CLASS_BALANCED:
            empty = np.flatnonzero(self._counts == 0)
            if empty.size:
                raise ZeroCountClassError(int(empty[0]))

    @property
    def spec(self) -> SamplerSpec:
        return self._spec

    @property
    def n(self) -> int:
        return self._n

    def draw(self, size: int | None = None) -> IndexArray:
        size = self._spec.batch_size if size is None else size
        if self._spec.kind is SamplerKind.INSTANCE_BALANCED:
            return self._rng.integers(0, self._n, size=size, dtype=np.int64)

        classes = self._rng.integers(0, self._counts.size, size=size)
        offsets = self._rng.integers(0, self._counts[classes])
        return self._members[self._starts[classes] + offsets]

    def epoch(self, batches: int) -> Iterator[IndexArray]:
        for _ in range(batches):
            yield self.draw()


def draw_batch(spec: SamplerSpec, labels: npt.ArrayLike) -> IndexArray:
    """Draw one batch of `spec.batch_size` indices with a fresh generator seeded from `spec.seed`."""
    return BatchSampler(spec, labels).draw()
