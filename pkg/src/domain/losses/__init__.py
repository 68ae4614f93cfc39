from src.domain.losses.bce import bce_multilabel
from src.domain.losses.errors import LossError
from src.domain.losses.errors import LossErrorCode
from src.domain.losses.ics import ics_bce
from src.domain.losses.loss_result import LossResult
from src.domain.losses.mlmc import mlmc_loss
from src.domain.losses.mlmc import parent_logits
from src.domain.losses.mlmc import parent_probabilities
from src.domain.losses.per_level import per_level_loss

__all__ = [
    "LossError",
    "LossErrorCode",
    "LossResult",
    "bce_multilabel",
    "ics_bce",
    "mlmc_loss",
    "parent_logits",
    "parent_probabilities",
    "per_level_loss",
]
