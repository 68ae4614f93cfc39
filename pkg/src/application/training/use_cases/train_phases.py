from src.application.training.config import Phase1Loss
from src.application.training.config import TrainConfig
from src.application.training.errors import TreeDatasetMismatchError
from src.application.training.loop import PhaseResult
from src.application.training.loop import train_model
from src.application.training.objectives import BceObjective
from src.application.training.objectives import DistillObjective
from src.application.training.objectives import MlmcObjective
from src.application.training.objectives import Objective
from src.application.training.objectives import PerLevelObjective
from src.application.training.objectives import build_view
from src.application.training.ports.training_monitor import TrainingMonitor
from src.domain.common.seeding import STREAM_PHASE1
from src.domain.common.seeding import STREAM_PHASE2
from src.domain.common.seeding import STREAM_PHASE3
from src.domain.common.seeding import derive_seed
from src.domain.dataset.entities.multilabel_dataset import DatasetSplits
from src.domain.dataset.subset import train_subset
from src.domain.hierarchy.entities.hierarchy_tree import HierarchyTree
from src.domain.model.model_bundle import ModelBundle
from src.domain.model.model_bundle import freeze_extractor
from src.domain.model.model_bundle import init_model
from src.domain.model.model_bundle import unfreeze_extractor
from src.domain.model.model_bundle import without_level_heads
from src.domain.sampling.batch_sampler import SamplerKind
from src.domain.sampling.batch_sampler import SamplerSpec


def _check_tree(data: DatasetSplits, tree: HierarchyTree) -> None:
    if tree.leaf_count != data.k:
        raise TreeDatasetMismatchError(tree.leaf_count, data.k)


def fresh_model(
    data: DatasetSplits, cfg: TrainConfig, level_widths: list[int] | None = None
) -> ModelBundle:
    """Seeded initialization shared by the first teacher and the student."""
    return init_model(
        input_dim=data.d,
        hidden_dims=cfg.hidden_dims,
        embedding_dim=cfg.embedding_dim,
        num_classes=data.k,
        seed=cfg.seed,
        level_widths=level_widths or [],
    )


class TrainPhase1:
    """Hierarchy-aware pre-training of the first teacher under instance-balanced sampling.

    Only a seeded `phase1_fraction` of the train split is used when it is below 1.
    """

    def __init__(self, monitor: TrainingMonitor) -> None:
        self._monitor = monitor

    def execute(self, data: DatasetSplits, tree: HierarchyTree, cfg: TrainConfig) -> PhaseResult:
        _check_tree(data, tree)
        objective: Objective
        level_widths: list[int] = []
        match cfg.phase1_loss:
            case Phase1Loss.FLAT:
                objective = BceObjective()
            case Phase1Loss.MLMC:
                objective = MlmcObjective(tree)
            case Phase1Loss.PER_LEVEL:
                objective = PerLevelObjective(tree)
                level_widths = [tree.node_count(m) for m in range(2, tree.levels + 1)]

        train = train_subset(data.train, cfg.phase1_fraction, cfg.seed)
        return train_model(
            phase=1,
            model=fresh_model(data, cfg, level_widths),
            objective=objective,
            train=build_view(train, tree, with_delta=False),
            val=build_view(data.val, tree, with_delta=False),
            sampler_spec=SamplerSpec(
                kind=SamplerKind.INSTANCE_BALANCED,
                batch_size=cfg.batch_size,
                seed=derive_seed(cfg.seed, STREAM_PHASE1),
            ),
            cfg=cfg,
            monitor=self._monitor,
        )


class TrainPhase2:
    """Classifier re-training with instance-wise class-balanced sampling.

    Starts from the first teacher's parameters (level heads dropped) and,
    with `crt_freeze`, only updates the classifier. Trains on `phase2_fraction` of the
    train split; validation δ is taken from that subset's class counts.
    """

    def __init__(self, monitor: TrainingMonitor) -> None:
        self._monitor = monitor

    def execute(
        self,
        data: DatasetSplits,
        tree: HierarchyTree,
        cfg: TrainConfig,
        init_from: ModelBundle,
    ) -> PhaseResult:
        _check_tree(data, tree)
        model = without_level_heads(unfreeze_extractor(init_from))
        if cfg.crt_freeze:
            model = freeze_extractor(model)

        transform = cfg.delta_transform
        objective: Objective = (
            MlmcObjective(tree, transform, cfg.delta_at_parents)
            if cfg.use_mlmc_phase2
            else BceObjective(transform)
        )
        train = train_subset(data.train, cfg.phase2_fraction, cfg.seed)
        result = train_model(
            phase=2,
            model=model,
            objective=objective,
            train=build_view(train, tree, True, cfg.delta_at_parents),
            val=build_view(data.val, tree, True, cfg.delta_at_parents, counts_from=train),
            sampler_spec=SamplerSpec(
                kind=SamplerKind.CLASS_BALANCED,
                batch_size=cfg.batch_size,
                seed=derive_seed(cfg.seed, STREAM_PHASE2),
            ),
            cfg=cfg,
            monitor=self._monitor,
        )
        return PhaseResult(
            model=unfreeze_extractor(result.model), record=result.record, step=result.step
        )


class TrainPhase3:
    """Hybrid distillation of both frozen teachers into a freshly initialized student.

    The student's BCE term is δ-weighted with class-balanced batches when
    ICS is enabled, and plain with instance-balanced batches otherwise.
    """

    def __init__(self, monitor: TrainingMonitor) -> None:
        self._monitor = monitor

    def execute(
        self,
        data: DatasetSplits,
        tree: HierarchyTree,
        cfg: TrainConfig,
        teacher1: ModelBundle,
        teacher2: ModelBundle,
    ) -> PhaseResult:
        _check_tree(data, tree)
        transform = cfg.delta_transform if cfg.use_ics else None
        objective = DistillObjective(
            feature_teacher=without_level_heads(teacher1),
            logits_teacher=without_level_heads(teacher2),
            kd=cfg.kd,
            transform=transform,
        )
        return train_model(
            phase=3,
            model=fresh_model(data, cfg),
            objective=objective,
            train=build_view(data.train, tree, with_delta=cfg.use_ics),
            val=build_view(data.val, tree, with_delta=cfg.use_ics, counts_from=data.train),
            sampler_spec=SamplerSpec(
                kind=SamplerKind.CLASS_BALANCED if cfg.use_ics else SamplerKind.INSTANCE_BALANCED,
                batch_size=cfg.batch_size,
                seed=derive_seed(cfg.seed, STREAM_PHASE3),
            ),
            cfg=cfg,
            monitor=self._monitor,
        )
