from dataclasses import dataclass
from dataclasses import field
from enum import StrEnum

import numpy as np
import numpy.typing as npt

from src.domain.common.arrays import BinaryArray
from src.domain.common.arrays import IndexArray
from src.domain.common.arrays import as_binary_matrix
from src.domain.dataset.errors import InvalidDatasetError

MIN_CLASSES = 2


class Split(StrEnum):
    TRAIN = "train"
    VAL = "val"
    TEST = "test"


@dataclass(frozen=True, eq=False)
class MultiLabelDataset:
    """Feature matrix plus binary label matrix for one split.

    Arrays are stored read-only; `class_counts` is always recomputed from
    the labels and never accepted from the outside.
    """

    features: npt.NDArray[np.float32]
    labels: BinaryArray
    split: Split
    seed: int | None = None
    class_counts: IndexArray = field(init=False)

    def __post_init__(self) -> None:
        features = np.ascontiguousarray(self.features, dtype=np.float32)
        try:
            labels = np.ascontiguousarray(as_binary_matrix(self.labels))
        except ValueError as error:
            raise InvalidDatasetError(str(error)) from error

        errors: list[InvalidDatasetError] = []
        if features.ndim != 2:  # noqa: PLR2004
            raise InvalidDatasetError(f"Features must be 2-D, got shape {features.shape}.")
        n, d = features.shape
        if n < 1:
            errors.append(InvalidDatasetError("Dataset must hold at least one sample."))
        if d < 1:
            errors.append(InvalidDatasetError("Features must have at least one column."))
        if labels.shape[0] != n:
            errors.append(
                InvalidDatasetError(
                    f"Features have {n} rows but labels have {labels.shape[0]}."
                )
            )
        if labels.shape[1] < MIN_CLASSES:
            errors.append(
                InvalidDatasetError(f"At least {MIN_CLASSES} classes are required.")
            )
        if not np.isfinite(features).all():
            errors.append(InvalidDatasetError("Features contain non-finite values."))
        if labels.shape[0] == n and n:
            empty_rows = np.flatnonzero(labels.sum(axis=1) == 0)
            if empty_rows.size:
                errors.append(
                    InvalidDatasetError(
                        f"{empty_rows.size} rows have no positive label "
                        f"(first: {int(empty_rows[0])})."
                    )
                )
        if len(errors) == 1:
            raise errors[0]
        if errors:
            raise ExceptionGroup("Dataset validation failed", errors)

        features.setflags(write=False)
        labels.setflags(write=False)
        counts = labels.sum(axis=0, dtype=np.int64)
        counts.setflags(write=False)
        object.__setattr__(self, "features", features)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "split", Split(self.split))
        object.__setattr__(self, "class_counts", counts)

    @property
    def n(self) -> int:
        return int(self.features.shape[0])

    @property
    def d(self) -> int:
        return int(self.features.shape[1])

    @property
    def k(self) -> int:
        return int(self.labels.shape[1])

    def __repr__(self) -> str:
        return f"MultiLabelDataset(split={self.split}, n={self.n}, k={self.k}, d={self.d})"


@dataclass(frozen=True, eq=False)
class DatasetSplits:
    """Disjoint train / val / test splits over the same label columns."""

    train: MultiLabelDataset
    val: MultiLabelDataset
    test: MultiLabelDataset

    def __post_init__(self) -> None:
        widths = {(s.k, s.d) for s in (self.train, self.val, self.test)}
        if len(widths) != 1:
            raise InvalidDatasetError(
                f"Splits disagree on (k, d): {sorted(widths)}."
            )

    @property
    def k(self) -> int:
        return self.train.k

    @property
    def d(self) -> int:
        return self.train.d

    def by_split(self) -> dict[Split, MultiLabelDataset]:
        return {Split.TRAIN: self.train, Split.VAL: self.val, Split.TEST: self.test}

    def get(self, split: Split) -> MultiLabelDataset:
        return self.by_split()[split]
