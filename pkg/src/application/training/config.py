import hashlib
from collections.abc import Sequence
from enum import StrEnum
from typing import Annotated
from typing import Any

from pydantic import BaseModel
from pydantic import ConfigDict
from pydantic import Field
from pydantic import field_validator
from pydantic import model_validator

from src.domain.dataset.value_objects.group_assignment import GroupThresholds
from src.domain.distill.kd_config import KdConfig
from src.domain.distill.kd_config import KlVariant
from src.domain.sampling.delta_weights import DeltaTransform


class Phase1Loss(StrEnum):
    FLAT = "flat"
    MLMC = "mlmc"
    PER_LEVEL = "per_level"


class TrainConfig(BaseModel):
    """Training configuration file. Unknown keys are rejected."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    epochs: int = Field(30, ge=1)
    batch_size: int = Field(128, ge=1)
    alpha: float = Field(0.2, ge=0.0, le=0.5)
    beta: float = Field(0.2, ge=0.0, le=0.5)
    gamma: float = Field(10.0, gt=0.0)
    temperature: float = Field(3.0, gt=0.0)
    kl_variant: KlVariant = KlVariant.FULL_BINARY
    crt_freeze: bool = False
    use_mlmc_phase2: bool = True
    seed: int = Field(0, ge=0)
    lr_initial: float = Field(1e-3, gt=0.0)
    lr_floor: float = Field(1e-7, gt=0.0)
    lr_patience: int = Field(5, ge=1)
    lr_factor: float = Field(0.1, gt=0.0, lt=1.0)
    group_thresholds: GroupThresholds = GroupThresholds()
    phase1_loss: Phase1Loss = Phase1Loss.MLMC
    use_ics: bool = True
    use_hybrid_kd: bool = True
    delta_transform: DeltaTransform = DeltaTransform.SQRT
    delta_at_parents: bool = False
    early_stop_patience: int = Field(0, ge=0, description="0 disables early stopping")
    phase1_fraction: float = Field(
        1.0, gt=0.0, le=1.0, description="Share of the train split seen by phase 1"
    )
    phase2_fraction: float = Field(
        1.0, gt=0.0, le=1.0, description="Share of the train split seen by phase 2"
    )
    hidden_dims: tuple[int, ...] = (64,)
    embedding_dim: int = Field(32, ge=1)

    @field_validator("group_thresholds", mode="before")
    @classmethod
    def _thresholds_from_pair(cls, value: Any) -> Any:
        if isinstance(value, Sequence) and not isinstance(value, str | bytes):
            t_many, t_few = value  # type: ignore [reportUnknownVariableType]
            return {"t_many": t_many, "t_few": t_few}
        return value

    @field_validator("hidden_dims")
    @classmethod
    def _positive_widths(cls, value: tuple[int, ...]) -> tuple[int, ...]:
        if any(width < 1 for width in value):
            raise ValueError("hidden_dims entries must be >= 1")
        return value

    @model_validator(mode="after")
    def _check_consistency(self) -> "TrainConfig":
        if self.lr_floor > self.lr_initial:
            raise ValueError("lr_floor must not exceed lr_initial")
        return self

    @property
    def kd(self) -> KdConfig:
        return KdConfig(
            alpha=self.alpha,
            beta=self.beta,
            gamma=self.gamma,
            temperature=self.temperature,
            kl_variant=self.kl_variant,
        )

    @property
    def use_mlmc(self) -> bool:
        return self.phase1_loss is Phase1Loss.MLMC


def config_hash(cfg: BaseModel) -> str:
    return hashlib.sha256(cfg.model_dump_json().encode()).hexdigest()[:16]


class Component(StrEnum):
    MLMC = "mlmc"
    ICS = "ics"
    CRT = "crt"
    HYBRID_KD = "hybrid_kd"


class ComponentToggles(BaseModel):
    """One ablation row: which method components are switched on."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    mlmc: bool = False
    ics: bool = False
    crt: bool = False
    hybrid_kd: bool = False

    @classmethod
    def from_components(cls, components: Sequence[Component | str]) -> "ComponentToggles":
        return cls(**{str(Component(c)): True for c in components})

    @property
    def name(self) -> str:
        enabled = [c.value for c in Component if getattr(self, c.value)]
        return "+".join(enabled) if enabled else "none"

    def apply(self, cfg: TrainConfig) -> TrainConfig:
        return cfg.model_copy(
            update={
                "phase1_loss": Phase1Loss.MLMC if self.mlmc else Phase1Loss.FLAT,
                "use_mlmc_phase2": self.mlmc,
                "use_ics": self.ics,
                "crt_freeze": self.crt,
                "use_hybrid_kd": self.hybrid_kd,
            }
        )


DEFAULT_ABLATION_ROWS: tuple[tuple[Component, ...], ...] = (
    (),
    (Component.MLMC,),
    (Component.ICS,),
    (Component.MLMC, Component.ICS),
    (Component.MLMC, Component.ICS, Component.CRT),
    (Component.MLMC, Component.ICS, Component.HYBRID_KD),
    (Component.MLMC, Component.ICS, Component.CRT, Component.HYBRID_KD),
)


class AblationSettings(BaseModel):
    """Ablation grid file: a training body, component rows and the seeds to average over."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    train: TrainConfig = TrainConfig()
    rows: tuple[tuple[Component, ...], ...] = DEFAULT_ABLATION_ROWS
    seeds: tuple[int, ...] = Field((0, 1, 2, 3, 4), min_length=1)
    split: str = Field("test", pattern="^(val|test)$")

    def toggles(self) -> list[ComponentToggles]:
        return [ComponentToggles.from_components(row) for row in self.rows]


class KdMode(StrEnum):
    """Which distillation terms a sweep point switches on."""

    HYBRID = "hybrid"
    FEATURE = "feature"
    LOGITS = "logits"

    def shares(self, weight: float) -> tuple[float, float]:
        """(alpha, beta) for one swept weight; hybrid keeps alpha equal to beta."""
        match self:
            case KdMode.HYBRID:
                return weight, weight
            case KdMode.FEATURE:
                return weight, 0.0
            case KdMode.LOGITS:
                return 0.0, weight


class KdPoint(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    mode: KdMode
    temperature: float
    alpha: float
    beta: float

    @property
    def name(self) -> str:
        return f"{self.mode}_t{self.temperature:g}_a{self.alpha:g}_b{self.beta:g}"

    def apply(self, cfg: TrainConfig) -> TrainConfig:
        return TrainConfig.model_validate(
            {
                **cfg.model_dump(),
                "temperature": self.temperature,
                "alpha": self.alpha,
                "beta": self.beta,
                "use_hybrid_kd": True,
            }
        )


Share = Annotated[float, Field(ge=0.0, le=0.5)]
Temperature = Annotated[float, Field(gt=0.0)]
Fraction = Annotated[float, Field(gt=0.0, le=1.0)]


class KdStudySettings(BaseModel):
    """Distillation sweep file: temperature × weight for each distillation mode.

    Both teachers are trained once per seed from `train`; only the student
    is retrained per point. Points that end up with the same (T, alpha,
    beta), e.g. weight 0 in every mode, are run once.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    train: TrainConfig = TrainConfig()
    temperatures: tuple[Temperature, ...] = Field((1.0, 3.0, 10.0), min_length=1)
    weights: tuple[Share, ...] = Field((0.0, 0.1, 0.2, 0.25, 0.5), min_length=1)
    modes: tuple[KdMode, ...] = Field(tuple(KdMode), min_length=1)
    seeds: tuple[int, ...] = Field((0, 1, 2, 3, 4), min_length=1)
    split: str = Field("test", pattern="^(val|test)$")

    def points(self) -> list[KdPoint]:
        points: list[KdPoint] = []
        seen: set[tuple[float, float, float]] = set()
        for mode in self.modes:
            for temperature in self.temperatures:
                for weight in self.weights:
                    alpha, beta = mode.shares(weight)
                    key = (temperature, alpha, beta)
                    if key in seen:
                        continue
                    seen.add(key)
                    points.append(
                        KdPoint(mode=mode, temperature=temperature, alpha=alpha, beta=beta)
                    )
        return points


class DecouplingSettings(BaseModel):
    """Representation/classifier bound file.

    For every fraction f, the representation is learned on f of the train
    split and the frozen-extractor classifier is re-trained once on the
    same f and once on the whole split. The final model is the second
    teacher, so distillation is off.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    train: TrainConfig = TrainConfig()
    fractions: tuple[Fraction, ...] = Field((0.1, 0.2, 0.5, 1.0), min_length=1)
    seeds: tuple[int, ...] = Field((0, 1, 2, 3, 4), min_length=1)
    split: str = Field("test", pattern="^(val|test)$")

    def pairs(self) -> list[tuple[float, float]]:
        """(phase-1 fraction, phase-2 fraction) pairs, each fraction against itself and 1."""
        pairs: list[tuple[float, float]] = []
        for fraction in self.fractions:
            for target in (fraction, 1.0):
                if (fraction, target) not in pairs:
                    pairs.append((fraction, target))
        return pairs

    def apply(self, representation: float, classifier: float) -> TrainConfig:
        return self.train.model_copy(
            update={
                "phase1_fraction": representation,
                "phase2_fraction": classifier,
                "use_ics": True,
                "crt_freeze": True,
                "use_hybrid_kd": False,
            }
        )
