from collections.abc import Sequence

import numpy as np
import numpy.typing as npt

from src.domain.hierarchy.entities.hierarchy_tree import LEAF_LEVEL
from src.domain.hierarchy.entities.hierarchy_tree import HierarchyTree
from src.domain.hierarchy.entities.hierarchy_tree import derive_level_label_matrix
from src.domain.losses.bce import bce_multilabel
from src.domain.losses.errors import LevelWidthMismatchError
from src.domain.losses.errors import TreeMismatchError
from src.domain.losses.loss_result import LossResult


def per_level_loss(
    level_logits: Sequence[npt.ArrayLike],
    labels: npt.ArrayLike,
    tree: HierarchyTree,
) -> LossResult:
    """Per-level classifier baseline: one independent BCE per level head.

    `level_logits[0]` are the leaf logits and `level_logits[m - 1]` the
    logits of the level-m head. Gradients stay on their own head.

    Raises:
        LevelWidthMismatchError: Wrong number of heads or a head of the wrong width
    """
    if len(level_logits) != tree.levels:
        raise LevelWidthMismatchError(
            f"Expected {tree.levels} logit matrices, got {len(level_logits)}."
        )
    y = np.asarray(labels)
    if y.ndim != 2 or y.shape[1] != tree.leaf_count:  # noqa: PLR2004
        raise TreeMismatchError(
            f"Hierarchy has {tree.leaf_count} leaves but labels have shape {y.shape}."
        )

    targets = {LEAF_LEVEL: y, **derive_level_label_matrix(tree, y)}
    results: list[LossResult] = []
    for level, logits in enumerate(level_logits, start=LEAF_LEVEL):
        z = np.asarray(logits, dtype=np.float64)
        width = tree.node_count(level)
        if z.ndim != 2 or z.shape != (y.shape[0], width):  # noqa: PLR2004
            raise LevelWidthMismatchError(
                f"Level {level} logits have shape {z.shape}, expected ({y.shape[0]}, {width})."
            )
        results.append(bce_multilabel(z, targets[level]))

    values = tuple(r.value for r in results)
    return LossResult(
        value=float(sum(values)),
        dlogits=results[0].dlogits,
        per_level_values=values,
        dlevel_logits=tuple(r.dlogits for r in results[1:]),
    )
