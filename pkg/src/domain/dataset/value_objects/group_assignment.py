from collections.abc import Sequence
from enum import StrEnum

import numpy as np
from pydantic import BaseModel
from pydantic import ConfigDict
from pydantic import Field
from pydantic import model_validator

from src.domain.dataset.errors import InvalidThresholdsError


class ShotGroup(StrEnum):
    MANY = "many"
    MEDIUM = "medium"
    FEW = "few"


DEFAULT_T_MANY = 100
DEFAULT_T_FEW = 10


class GroupThresholds(BaseModel):
    """Absolute sample-count boundaries between the shot groups."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    t_many: int = DEFAULT_T_MANY
    t_few: int = DEFAULT_T_FEW

    @model_validator(mode="after")
    def _check_order(self) -> "GroupThresholds":
        if not self.t_many > self.t_few >= 1:
            raise InvalidThresholdsError(
                f"Group thresholds must satisfy t_many > t_few >= 1, got ({self.t_many}, {self.t_few})."
            )
        return self


class RatioThresholds(BaseModel):
    """Boundaries expressed as a fraction of the largest class count."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    r_many: float = Field(..., le=1.0)
    r_few: float = Field(..., gt=0.0)

    @model_validator(mode="after")
    def _check_order(self) -> "RatioThresholds":
        if not self.r_many > self.r_few:
            raise InvalidThresholdsError(
                f"Ratio thresholds must satisfy 1 >= r_many > r_few > 0, got ({self.r_many}, {self.r_few})."
            )
        return self


class GroupAssignment(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    group_of_class: tuple[ShotGroup, ...]
    thresholds: GroupThresholds | RatioThresholds
    class_counts: tuple[int, ...]

    def classes_in(self, group: ShotGroup) -> list[int]:
        return [j for j, g in enumerate(self.group_of_class) if g == group]

    @property
    def k(self) -> int:
        return len(self.group_of_class)


def _group_for(value: float, upper: float, lower: float) -> ShotGroup:
    if value >= upper:
        return ShotGroup.MANY
    if value >= lower:
        return ShotGroup.MEDIUM
    return ShotGroup.FEW


def assign_groups(
    class_counts: Sequence[int], thresholds: GroupThresholds | tuple[int, int]
) -> GroupAssignment:
    """Assign each class to many / medium / few by absolute count.

    count >= t_many -> many; t_few <= count < t_many -> medium; count < t_few -> few.
    """
    if not isinstance(thresholds, GroupThresholds):
        t_many, t_few = thresholds
        if not t_many > t_few >= 1:
            raise InvalidThresholdsError(
                f"Group thresholds must satisfy t_many > t_few >= 1, got ({t_many}, {t_few})."
            )
        thresholds = GroupThresholds(t_many=t_many, t_few=t_few)
    counts = tuple(int(c) for c in class_counts)
    return GroupAssignment(
        group_of_class=tuple(
            _group_for(c, thresholds.t_many, thresholds.t_few) for c in counts
        ),
        thresholds=thresholds,
        class_counts=counts,
    )


def assign_groups_by_ratio(
    class_counts: Sequence[int], thresholds: RatioThresholds
) -> GroupAssignment:
    """Assign groups by count relative to the largest class."""
    counts = tuple(int(c) for c in class_counts)
    largest = max(counts) if counts else 0
    if largest <= 0:
        raise InvalidThresholdsError("Ratio grouping needs at least one non-empty class.")
    ratios = np.asarray(counts, dtype=np.float64) / largest
    return GroupAssignment(
        group_of_class=tuple(
            _group_for(float(r), thresholds.r_many, thresholds.r_few) for r in ratios
        ),
        thresholds=thresholds,
        class_counts=counts,
    )
