from src.domain.sampling.batch_sampler import BatchSampler
from src.domain.sampling.batch_sampler import SamplerKind
from src.domain.sampling.batch_sampler import SamplerSpec
from src.domain.sampling.batch_sampler import draw_batch
from src.domain.sampling.delta_weights import DeltaTransform
from src.domain.sampling.delta_weights import DeltaWeights
from src.domain.sampling.delta_weights import compute_delta
from src.domain.sampling.errors import AllNegativeRowError
from src.domain.sampling.errors import SamplingError
from src.domain.sampling.errors import SamplingErrorCode
from src.domain.sampling.errors import ZeroCountClassError
from src.domain.sampling.exposure import ExposureEstimate
from src.domain.sampling.exposure import expected_exposure
from src.domain.sampling.exposure import simulate_exposure

__all__ = [
    "AllNegativeRowError",
    "BatchSampler",
    "DeltaTransform",
    "DeltaWeights",
    "ExposureEstimate",
    "SamplerKind",
    "SamplerSpec",
    "SamplingError",
    "SamplingErrorCode",
    "ZeroCountClassError",
    "compute_delta",
    "draw_batch",
    "expected_exposure",
    "simulate_exposure",
]
