"""Phase objectives: map a model and a batch to a loss value and parameter gradients."""

from abc import ABC
from abc import abstractmethod
from collections.abc import Mapping
from dataclasses import dataclass
from dataclasses import field

import numpy as np
import numpy.typing as npt

from src.domain.common.arrays import BinaryArray
from src.domain.common.arrays import FloatArray
from src.domain.dataset.entities.multilabel_dataset import MultiLabelDataset
from src.domain.distill.feature_kd import feature_kd
from src.domain.distill.kd_config import KdConfig
from src.domain.distill.logits_kd import logits_kd
from src.domain.distill.total_loss import total_loss
from src.domain.distill.total_loss import total_loss_coefficients
from src.domain.hierarchy.entities.hierarchy_tree import HierarchyTree
from src.domain.hierarchy.entities.hierarchy_tree import derive_level_label_matrix
from src.domain.losses.bce import bce_multilabel
from src.domain.losses.ics import ics_bce
from src.domain.losses.loss_result import LossResult
from src.domain.losses.mlmc import mlmc_loss
from src.domain.losses.per_level import per_level_loss
from src.domain.model.model_bundle import GradBundle
from src.domain.model.model_bundle import ModelBundle
from src.domain.model.model_bundle import backward
from src.domain.model.model_bundle import embed
from src.domain.model.model_bundle import forward
from src.domain.model.model_bundle import forward_levels
from src.domain.sampling.delta_weights import DeltaTransform
from src.domain.sampling.delta_weights import DeltaWeights
from src.domain.sampling.delta_weights import compute_delta


@dataclass(frozen=True, eq=False)
class TrainingView:
    """Split arrays with δ precomputed over the whole split; `rows` slices a batch."""

    features: FloatArray
    labels: BinaryArray
    delta: DeltaWeights | None = None
    parent_delta: Mapping[int, DeltaWeights] = field(default_factory=dict)

    def rows(self, indices: npt.ArrayLike) -> "TrainingView":
        idx = np.asarray(indices)
        return TrainingView(
            features=self.features[idx],
            labels=self.labels[idx],
            delta=None if self.delta is None else self.delta.rows(idx),
            parent_delta={level: d.rows(idx) for level, d in self.parent_delta.items()},
        )


def build_view(
    dataset: MultiLabelDataset,
    tree: HierarchyTree,
    with_delta: bool,
    delta_at_parents: bool = False,
    counts_from: MultiLabelDataset | None = None,
) -> TrainingView:
    """Arrays of one split, with δ when requested.

    `counts_from` takes the class counts of δ from another split, so a
    validation split with a class absent still gets finite weights.
    """
    reference = dataset if counts_from is None else counts_from
    delta = None
    parent_delta: dict[int, DeltaWeights] = {}
    if with_delta:
        delta = compute_delta(dataset.labels, reference.class_counts)
    if with_delta and delta_at_parents:
        reference_levels = derive_level_label_matrix(tree, reference.labels)
        parent_delta = {
            level: compute_delta(labels, reference_levels[level].sum(axis=0, dtype=np.int64))
            for level, labels in derive_level_label_matrix(tree, dataset.labels).items()
        }
    return TrainingView(
        features=dataset.features.astype(np.float64),
        labels=dataset.labels,
        delta=delta,
        parent_delta=parent_delta,
    )


class Objective(ABC):
    """Loss of one training phase."""

    @abstractmethod
    def loss(
        self, model: ModelBundle, view: TrainingView, with_grad: bool = True
    ) -> tuple[float, GradBundle | None]: ...


def _leaf_bce(
    logits: FloatArray, view: TrainingView, transform: DeltaTransform | None
) -> LossResult:
    if transform is None or view.delta is None:
        return bce_multilabel(logits, view.labels)
    return ics_bce(logits, view.labels, view.delta, transform)


class BceObjective(Objective):
    """Leaf BCE, δ-weighted when a transform is given."""

    def __init__(self, transform: DeltaTransform | None = None) -> None:
        self._transform = transform

    def loss(
        self, model: ModelBundle, view: TrainingView, with_grad: bool = True
    ) -> tuple[float, GradBundle | None]:
        _, logits = forward(model, view.features)
        result = _leaf_bce(logits, view, self._transform)
        if not with_grad:
            return result.value, None
        return result.value, backward(model, view.features, d_logits=result.dlogits)


class MlmcObjective(Objective):
    def __init__(
        self,
        tree: HierarchyTree,
        transform: DeltaTransform | None = None,
        delta_at_parents: bool = False,
    ) -> None:
        self._tree = tree
        self._transform = transform
        self._delta_at_parents = delta_at_parents

    def loss(
        self, model: ModelBundle, view: TrainingView, with_grad: bool = True
    ) -> tuple[float, GradBundle | None]:
        _, logits = forward(model, view.features)
        weights = None
        level_weights = None
        if self._transform is not None and view.delta is not None:
            weights = view.delta.loss_weights(self._transform)
            if self._delta_at_parents:
                level_weights = {
                    level: d.loss_weights(self._transform)
                    for level, d in view.parent_delta.items()
                }
        result = mlmc_loss(logits, view.labels, self._tree, weights, level_weights)
        if not with_grad:
            return result.value, None
        return result.value, backward(model, view.features, d_logits=result.dlogits)


class PerLevelObjective(Objective):
    """Separate classifier head per level; the model must carry level heads."""

    def __init__(self, tree: HierarchyTree) -> None:
        self._tree = tree

    def loss(
        self, model: ModelBundle, view: TrainingView, with_grad: bool = True
    ) -> tuple[float, GradBundle | None]:
        result = per_level_loss(forward_levels(model, view.features), view.labels, self._tree)
        if not with_grad:
            return result.value, None
        return result.value, backward(
            model,
            view.features,
            d_logits=result.dlogits,
            d_level_logits=result.dlevel_logits,
        )


class DistillObjective(Objective):
    """(1−α−β)·L_BCE + α·γ·L_F-KD + β·L_C-KD against two frozen teachers.

    Feature distillation targets the embeddings of `feature_teacher`,
    logits distillation the outputs of `logits_teacher`.
    """

    def __init__(
        self,
        feature_teacher: ModelBundle,
        logits_teacher: ModelBundle,
        kd: KdConfig,
        transform: DeltaTransform | None = None,
    ) -> None:
        self._feature_teacher = feature_teacher
        self._logits_teacher = logits_teacher
        self._kd = kd
        self._transform = transform

    def loss(
        self, model: ModelBundle, view: TrainingView, with_grad: bool = True
    ) -> tuple[float, GradBundle | None]:
        embeddings, logits = forward(model, view.features)
        bce = _leaf_bce(logits, view, self._transform)
        fkd = feature_kd(embed(self._feature_teacher, view.features), embeddings)
        ckd = logits_kd(
            logits,
            forward(self._logits_teacher, view.features).logits,
            self._kd.temperature,
            self._kd.kl_variant,
        )
        value = total_loss(bce.value, fkd.value, ckd.value, self._kd)
        if not with_grad:
            return value, None

        c_bce, c_fkd, c_ckd = total_loss_coefficients(self._kd)
        return value, backward(
            model,
            view.features,
            d_embeddings=c_fkd * fkd.grad,
            d_logits=c_bce * bce.dlogits + c_ckd * ckd.grad,
        )
