from collections.abc import Mapping

import numpy as np
import numpy.typing as npt
from pydantic import BaseModel
from pydantic import ConfigDict
from pydantic import Field
from scipy.special import expit

from src.domain.dataset.entities.multilabel_dataset import MultiLabelDataset
from src.domain.dataset.value_objects.group_assignment import GroupAssignment
from src.domain.dataset.value_objects.group_assignment import ShotGroup
from src.domain.evaluation.average_precision import average_precision
from src.domain.evaluation.errors import EmptySplitError
from src.domain.evaluation.errors import StructureMismatchError
from src.domain.model.model_bundle import ModelBundle
from src.domain.model.model_bundle import forward


class EvalSpread(BaseModel):
    """Sample standard deviations (n − 1 denominator) mirroring an EvalReport."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    per_class_ap: tuple[float | None, ...]
    group_map: dict[ShotGroup, float | None]
    average: float
    all_class_map: float


class EvalReport(BaseModel):
    """Per-class AP and group mAPs of one model on one split.

    `per_class_ap[j]` and group entries are None when the class (or every
    class of the group) has no positive in the split. `average` is the
    unweighted mean of the non-empty group mAPs; `all_class_map` is the
    plain mean over evaluated classes.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    split: str | None = None
    per_class_ap: tuple[float | None, ...]
    class_groups: tuple[ShotGroup, ...]
    group_map: dict[ShotGroup, float | None]
    average: float
    all_class_map: float
    skipped_classes: tuple[int, ...] = ()
    std: EvalSpread | None = None
    trials: tuple["EvalReport", ...] = Field(default=())

    @property
    def k(self) -> int:
        return len(self.per_class_ap)


def average_of_groups(group_map: Mapping[ShotGroup, float | None]) -> float:
    present = [value for value in group_map.values() if value is not None]
    if not present:
        raise EmptySplitError("No group has an evaluated class.")
    return float(np.mean(present))


def summarize(
    per_class_ap: tuple[float | None, ...], class_groups: tuple[ShotGroup, ...]
) -> tuple[dict[ShotGroup, float | None], float, float]:
    """Group mAPs, their average and the all-class mAP from per-class APs."""
    group_map: dict[ShotGroup, float | None] = {}
    for group in ShotGroup:
        values = [
            ap
            for ap, g in zip(per_class_ap, class_groups, strict=True)
            if g == group and ap is not None
        ]
        group_map[group] = float(np.mean(values)) if values else None
    evaluated = [ap for ap in per_class_ap if ap is not None]
    if not evaluated:
        raise EmptySplitError("No class has a positive label in this split.")
    return group_map, average_of_groups(group_map), float(np.mean(evaluated))


def build_report(
    scores: npt.ArrayLike,
    labels: npt.ArrayLike,
    groups: GroupAssignment,
    split: str | None = None,
) -> EvalReport:
    """Score matrix (n×k) against labels; classes without positives are skipped."""
    s = np.asarray(scores, dtype=np.float64)
    y = np.asarray(labels)
    if s.ndim != 2 or s.shape != y.shape:  # noqa: PLR2004
        raise StructureMismatchError(
            f"Scores {s.shape} and labels {y.shape} must share an n×k shape."
        )
    if s.shape[0] == 0:
        raise EmptySplitError()
    if groups.k != s.shape[1]:
        raise StructureMismatchError(
            f"Group assignment covers {groups.k} classes, scores have {s.shape[1]}."
        )

    positives = y.sum(axis=0)
    per_class_ap = tuple(
        average_precision(s[:, j], y[:, j]) if positives[j] else None
        for j in range(s.shape[1])
    )
    group_map, average, all_class_map = summarize(per_class_ap, groups.group_of_class)
    return EvalReport(
        split=split,
        per_class_ap=per_class_ap,
        class_groups=groups.group_of_class,
        group_map=group_map,
        average=average,
        all_class_map=all_class_map,
        skipped_classes=tuple(j for j, ap in enumerate(per_class_ap) if ap is None),
    )


def evaluate(
    model: ModelBundle, dataset: MultiLabelDataset, groups: GroupAssignment
) -> EvalReport:
    """Rank every class by σ(leaf logits) over the split."""
    if dataset.n == 0:
        raise EmptySplitError()
    _, logits = forward(model, dataset.features)
    return build_report(expit(logits), dataset.labels, groups, split=str(dataset.split))
