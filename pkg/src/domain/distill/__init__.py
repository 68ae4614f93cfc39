from src.domain.distill.errors import DistillError
from src.domain.distill.errors import DistillErrorCode
from src.domain.distill.feature_kd import feature_kd
from src.domain.distill.kd_config import KdConfig
from src.domain.distill.kd_config import KlVariant
from src.domain.distill.kd_result import KdResult
from src.domain.distill.logits_kd import logits_kd
from src.domain.distill.total_loss import total_loss
from src.domain.distill.total_loss import total_loss_coefficients

__all__ = [
    "DistillError",
    "DistillErrorCode",
    "KdConfig",
    "KdResult",
    "KlVariant",
    "feature_kd",
    "logits_kd",
    "total_loss",
    "total_loss_coefficients",
]
