import math

import numpy as np

from src.domain.common.arrays import IndexArray
from src.domain.common.seeding import STREAM_TRAIN_SUBSET
from src.domain.common.seeding import derive_generator
from src.domain.dataset.entities.multilabel_dataset import MultiLabelDataset


def subset_indices(dataset: MultiLabelDataset, fraction: float, seed: int) -> IndexArray:
    """Sorted row indices of a seeded subset holding ⌈fraction·n⌉ rows or a few more.

    Rows are taken in one seeded permutation order, then the first row of
    every class still missing is added. For one seed, a smaller fraction
    always gives a subset of a larger one.
    """
    if not 0.0 < fraction <= 1.0:
        raise ValueError(f"fraction must lie in (0, 1], got {fraction}")
    if fraction == 1.0:
        return np.arange(dataset.n)

    order = derive_generator(seed, STREAM_TRAIN_SUBSET).permutation(dataset.n)
    size = max(1, math.ceil(fraction * dataset.n))
    chosen = set(order[:size].tolist())
    covered = dataset.labels[order[:size]].any(axis=0)
    for class_id in np.flatnonzero(~covered & (dataset.class_counts > 0)):
        first = order[np.argmax(dataset.labels[order, class_id] > 0)]
        chosen.add(int(first))
    return np.array(sorted(chosen), dtype=np.int64)


def train_subset(dataset: MultiLabelDataset, fraction: float, seed: int) -> MultiLabelDataset:
    """The `fraction` of a split that keeps every class with at least one positive."""
    if fraction == 1.0:
        return dataset
    idx = subset_indices(dataset, fraction, seed)
    return MultiLabelDataset(
        features=dataset.features[idx],
        labels=dataset.labels[idx],
        split=dataset.split,
        seed=dataset.seed,
    )
