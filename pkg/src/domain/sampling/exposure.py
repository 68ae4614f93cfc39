from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from src.domain.common.arrays import FloatArray
from src.domain.common.arrays import as_binary_matrix
from src.domain.sampling.batch_sampler import BatchSampler
from src.domain.sampling.batch_sampler import SamplerKind
from src.domain.sampling.batch_sampler import SamplerSpec
from src.domain.sampling.delta_weights import class_route_probabilities
from src.domain.sampling.errors import InvalidDrawsError


@dataclass(frozen=True, eq=False)
class ExposureEstimate:
    """Per-class positive exposure of a sampling strategy.

    `rate[j]` is the share of draws whose sample is positive for class j;
    `count[j]` scales it to one epoch of n draws.
    """

    kind: SamplerKind
    draws: int
    rate: FloatArray
    count: FloatArray


def simulate_exposure(
    spec: SamplerSpec, labels: npt.ArrayLike, draws: int
) -> ExposureEstimate:
    if draws < 1:
        raise InvalidDrawsError(draws)

    matrix = as_binary_matrix(labels)
    sampler = BatchSampler(spec, matrix)
    hits = np.zeros(matrix.shape[1], dtype=np.int64)
    remaining = draws
    while remaining:
        size = min(remaining, spec.batch_size)
        hits += matrix[sampler.draw(size)].sum(axis=0, dtype=np.int64)
        remaining -= size

    rate = hits / float(draws)
    return ExposureEstimate(
        kind=spec.kind, draws=draws, rate=rate, count=rate * matrix.shape[0]
    )


def expected_exposure(kind: SamplerKind, labels: npt.ArrayLike) -> FloatArray:
    """Analytic per-draw probability that the drawn sample is positive for each class."""
    matrix = as_binary_matrix(labels)
    if kind is SamplerKind.INSTANCE_BALANCED:
        return matrix.sum(axis=0, dtype=np.int64) / float(matrix.shape[0])

    p_route = class_route_probabilities(matrix)
    p_instance = matrix @ p_route
    return matrix.T.astype(np.float64) @ p_instance
