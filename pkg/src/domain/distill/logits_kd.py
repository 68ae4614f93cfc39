import numpy as np
import numpy.typing as npt
from scipy.special import expit

from src.domain.distill.errors import DistillShapeMismatchError
from src.domain.distill.errors import InvalidTemperatureError
from src.domain.distill.kd_config import KlVariant
from src.domain.distill.kd_result import KdResult

PROB_CLIP = 1e-7


def logits_kd(
    z_student: npt.ArrayLike,
    z_teacher: npt.ArrayLike,
    temperature: float,
    variant: KlVariant = KlVariant.FULL_BINARY,
) -> KdResult:
    """Per-class divergence between temperature-scaled sigmoid outputs.

    p = σ(z / T), clamped to [1e-7, 1 − 1e-7]. full_binary is the two-term
    Bernoulli KL(p_t ‖ p_s); literal keeps only p_t·ln(p_t / p_s) and can be
    negative. Averaged over batch and classes. Entries where the student
    probability is clamped get no gradient.

    Raises:
        InvalidTemperatureError: temperature <= 0
        DistillShapeMismatchError: Logit shapes differ
    """
    if not temperature > 0:
        raise InvalidTemperatureError(temperature)
    zs = np.asarray(z_student, dtype=np.float64)
    zt = np.asarray(z_teacher, dtype=np.float64)
    if zs.ndim != 2 or zs.shape != zt.shape:  # noqa: PLR2004
        raise DistillShapeMismatchError(
            f"Student logits {zs.shape} and teacher logits {zt.shape} differ."
        )

    raw_ps = expit(zs / temperature)
    ps = np.clip(raw_ps, PROB_CLIP, 1.0 - PROB_CLIP)
    pt = np.clip(expit(zt / temperature), PROB_CLIP, 1.0 - PROB_CLIP)
    norm = 1.0 / zs.size

    if variant is KlVariant.FULL_BINARY:
        terms = pt * np.log(pt / ps) + (1.0 - pt) * np.log((1.0 - pt) / (1.0 - ps))
        grad = (ps - pt) / temperature * norm
    else:
        terms = pt * np.log(pt / ps)
        grad = -pt * (1.0 - ps) / temperature * norm

    clamped = (raw_ps < PROB_CLIP) | (raw_ps > 1.0 - PROB_CLIP)
    grad = np.where(clamped, 0.0, grad)
    return KdResult(value=float(terms.sum() * norm), grad=grad)
