from src.domain.model.adam import AdamState
from src.domain.model.adam import adam_step
from src.domain.model.errors import ModelError
from src.domain.model.errors import ModelErrorCode
from src.domain.model.errors import ModelShapeMismatchError
from src.domain.model.errors import NonFiniteGradientError
from src.domain.model.lr_schedule import LrSchedule
from src.domain.model.lr_schedule import schedule_step
from src.domain.model.model_bundle import Activation
from src.domain.model.model_bundle import DenseLayer
from src.domain.model.model_bundle import ForwardPass
from src.domain.model.model_bundle import GradBundle
from src.domain.model.model_bundle import ModelBundle
from src.domain.model.model_bundle import backward
from src.domain.model.model_bundle import forward
from src.domain.model.model_bundle import forward_levels
from src.domain.model.model_bundle import freeze_extractor
from src.domain.model.model_bundle import init_model

__all__ = [
    "Activation",
    "AdamState",
    "DenseLayer",
    "ForwardPass",
    "GradBundle",
    "LrSchedule",
    "ModelBundle",
    "ModelError",
    "ModelErrorCode",
    "ModelShapeMismatchError",
    "NonFiniteGradientError",
    "adam_step",
    "backward",
    "forward",
    "forward_levels",
    "freeze_extractor",
    "init_model",
    "schedule_step",
]
