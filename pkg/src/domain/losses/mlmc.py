"""Hierarchical marginalization loss.

A parent's logit is the sum of its descendant leaf logits (a leaf
reachable through several paths counts once), its probability is the
sigmoid of that sum, and every level is penalized with BCE against labels
OR-propagated from the leaves. Parent gradients flow back to all
descendant leaves through the transposed membership matrix.
"""

from collections.abc import Mapping

import numpy as np
import numpy.typing as npt
from scipy.special import expit

from src.domain.common.arrays import FloatArray
from src.domain.hierarchy.entities.hierarchy_tree import LEAF_LEVEL
from src.domain.hierarchy.entities.hierarchy_tree import HierarchyTree
from src.domain.hierarchy.entities.hierarchy_tree import derive_level_label_matrix
from src.domain.losses.bce import bce_multilabel
from src.domain.losses.errors import LossShapeMismatchError
from src.domain.losses.errors import TreeMismatchError
from src.domain.losses.loss_result import LossResult


def _check_leaf_inputs(
    tree: HierarchyTree, logits: npt.ArrayLike, labels: npt.ArrayLike
) -> tuple[FloatArray, npt.NDArray[np.uint8]]:
    z = np.asarray(logits, dtype=np.float64)
    y = np.asarray(labels)
    if z.ndim != 2 or y.shape != z.shape:  # noqa: PLR2004
        raise LossShapeMismatchError(
            f"Logits {z.shape} and labels {y.shape} must be the same batch×k shape."
        )
    if z.shape[1] != tree.leaf_count:
        raise TreeMismatchError(
            f"Hierarchy has {tree.leaf_count} leaves but logits have {z.shape[1]} columns."
        )
    return z, y.astype(np.uint8)


def parent_logits(tree: HierarchyTree, logits: npt.ArrayLike) -> dict[int, FloatArray]:
    """Marginal logits for levels 2..M (batch×k_m each, columns in node id order)."""
    z = np.asarray(logits, dtype=np.float64)
    if z.ndim != 2 or z.shape[1] != tree.leaf_count:  # noqa: PLR2004
        raise TreeMismatchError(
            f"Hierarchy has {tree.leaf_count} leaves but logits have shape {z.shape}."
        )
    return {
        level: z @ tree.level_matrix(level)
        for level in range(LEAF_LEVEL + 1, tree.levels + 1)
    }


def parent_probabilities(tree: HierarchyTree, logits: npt.ArrayLike) -> dict[int, FloatArray]:
    return {level: expit(z) for level, z in parent_logits(tree, logits).items()}


def mlmc_loss(
    logits: npt.ArrayLike,
    labels: npt.ArrayLike,
    tree: HierarchyTree,
    weights: npt.ArrayLike | None = None,
    level_weights: Mapping[int, npt.ArrayLike] | None = None,
) -> LossResult:
    """Sum of per-level BCE terms, each normalized by 1/(k_m·B).

    Args:
        logits: batch×k leaf logits
        labels: batch×k binary leaf labels
        tree: Hierarchy whose leaves are the k label columns
        weights: Optional batch×k multipliers for the leaf term
        level_weights: Optional batch×k_m multipliers per parent level

    Raises:
        TreeMismatchError: The tree does not have k leaves
        LossShapeMismatchError: Logits and labels disagree
    """
    z, y = _check_leaf_inputs(tree, logits, labels)
    leaf = bce_multilabel(z, y, weights)
    values = [leaf.value]
    grad = leaf.dlogits.copy()

    parent_labels = derive_level_label_matrix(tree, y)
    extra_weights = level_weights or {}
    for level, level_logits in parent_logits(tree, z).items():
        term = bce_multilabel(level_logits, parent_labels[level], extra_weights.get(level))
        values.append(term.value)
        grad += term.dlogits @ tree.level_matrix(level).T

    return LossResult(
        value=float(sum(values)), dlogits=grad, per_level_values=tuple(values)
    )
