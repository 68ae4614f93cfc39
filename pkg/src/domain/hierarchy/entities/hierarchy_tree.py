from collections.abc import Iterable
from collections.abc import Mapping
from collections.abc import Sequence
from types import MappingProxyType

import numpy as np
import numpy.typing as npt
from pydantic import BaseModel
from pydantic import ConfigDict
from pydantic import Field
from pydantic import ValidationError
from pydantic import field_serializer

from src.domain.common.arrays import BinaryArray
from src.domain.common.arrays import FloatArray
from src.domain.hierarchy.errors import DuplicateNodeError
from src.domain.hierarchy.errors import HierarchyCycleError
from src.domain.hierarchy.errors import HierarchyError
from src.domain.hierarchy.errors import HierarchyMalformedError
from src.domain.hierarchy.errors import LabelMismatchError
from src.domain.hierarchy.errors import OrphanNodeError
from src.domain.hierarchy.errors import UnknownNodeError
from src.domain.hierarchy.errors import WrongParentLevelError

LEAF_LEVEL = 1


class HierarchyNode(BaseModel):
    """One node of the label hierarchy. Level 1 nodes are the dataset classes."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    id: int = Field(..., ge=0)
    name: str
    level: int = Field(..., ge=LEAF_LEVEL)
    parents: frozenset[int] = frozenset()

    @field_serializer("parents")
    def _serialize_parents(self, parents: frozenset[int]) -> list[int]:
        return sorted(parents)


class HierarchyFile(BaseModel):
    """On-disk schema of a hierarchy file."""

    model_config = ConfigDict(extra="forbid")

    levels: int = Field(..., ge=LEAF_LEVEL)
    nodes: list[HierarchyNode]


def _raise_collected(errors: list[HierarchyError]) -> None:
    if len(errors) == 1:
        raise errors[0]
    if errors:
        raise ExceptionGroup("Hierarchy validation failed", errors)


class HierarchyTree:
    """Validated, immutable M-level label DAG.

    Column order at every level is ascending node id, which is also the
    column order of `level_matrix` and of derived parent labels.
    """

    __slots__ = (
        "_descendants",
        "_level_ids",
        "_level_matrices",
        "_levels",
        "_nodes",
    )

    def __init__(self, levels: int, nodes: Iterable[HierarchyNode]) -> None:
        node_list = list(nodes)
        self._levels = levels
        self._nodes = MappingProxyType(self._index_nodes(node_list))
        self._validate_structure()
        self._level_ids = MappingProxyType(
            {
                level: tuple(
                    sorted(n.id for n in self._nodes.values() if n.level == level)
                )
                for level in range(LEAF_LEVEL, levels + 1)
            }
        )
        self._validate_levels()
        self._descendants = MappingProxyType(self._compute_descendants())
        self._level_matrices = MappingProxyType(self._compute_level_matrices())

    @staticmethod
    def _index_nodes(node_list: list[HierarchyNode]) -> dict[int, HierarchyNode]:
        indexed: dict[int, HierarchyNode] = {}
        errors: list[HierarchyError] = []
        for node in node_list:
            if node.id in indexed:
                errors.append(DuplicateNodeError("Duplicate node id.", node.id))
            indexed[node.id] = node
        _raise_collected(errors)
        return indexed

    def _validate_structure(self) -> None:
        errors: list[HierarchyError] = []
        for node in self._nodes.values():
            if node.level > self._levels:
                errors.append(
                    HierarchyMalformedError(
                        f"Level {node.level} exceeds the declared {self._levels} levels.",
                        node.id,
                    )
                )
            errors.extend(
                HierarchyMalformedError(f"Unknown parent id {parent}.", node.id)
                for parent in sorted(node.parents)
                if parent not in self._nodes
            )
        _raise_collected(errors)

        # Cycles are reported before level checks so a self-parent reads as a cycle.
        self._detect_cycles()

        errors = []
        for node in self._nodes.values():
            errors.extend(
                WrongParentLevelError(
                    f"Parent {parent} is at level {self._nodes[parent].level}, "
                    f"expected {node.level + 1}.",
                    node.id,
                )
                for parent in sorted(node.parents)
                if self._nodes[parent].level != node.level + 1
            )
            if node.level < self._levels and not node.parents:
                errors.append(
                    OrphanNodeError(
                        f"Level {node.level} node has no parent.", node.id
                    )
                )
        _raise_collected(errors)

    def _detect_cycles(self) -> None:
        unvisited, in_progress, done = 0, 1, 2
        state = dict.fromkeys(self._nodes, unvisited)

        for root in sorted(self._nodes):
            if state[root] != unvisited:
                continue
            stack: list[tuple[int, list[int]]] = [
                (root, sorted(self._nodes[root].parents))
            ]
            state[root] = in_progress
            while stack:
                node_id, pending = stack[-1]
                if not pending:
                    state[node_id] = done
                    stack.pop()
                    continue
                parent = pending.pop()
                if state[parent] == in_progress:
                    raise HierarchyCycleError(
                        f"Cycle detected through parent {parent}.", node_id
                    )
                if state[parent] == unvisited:
                    state[parent] = in_progress
                    stack.append((parent, sorted(self._nodes[parent].parents)))

    def _validate_levels(self) -> None:
        leaf_ids = self._level_ids[LEAF_LEVEL]
        if not leaf_ids:
            raise HierarchyMalformedError("Hierarchy has no leaf (level 1) nodes.")
        if leaf_ids != tuple(range(len(leaf_ids))):
            raise HierarchyMalformedError(
                f"Leaf ids must be exactly 0..{len(leaf_ids) - 1}."
            )
        for level in range(LEAF_LEVEL + 1, self._levels + 1):
            if not self._level_ids[level]:
                raise HierarchyMalformedError(f"Level {level} has no nodes.")

    def _compute_descendants(self) -> dict[int, frozenset[int]]:
        children: dict[int, list[int]] = {node_id: [] for node_id in self._nodes}
        for node in self._nodes.values():
            for parent in node.parents:
                children[parent].append(node.id)

        descendants: dict[int, frozenset[int]] = {}
        for level in range(LEAF_LEVEL, self._levels + 1):
            for node_id in self._level_ids[level]:
                if level == LEAF_LEVEL:
                    descendants[node_id] = frozenset((node_id,))
                else:
                    descendants[node_id] = frozenset().union(
                        *(descendants[child] for child in children[node_id])
                    )
        return descendants

    def _compute_level_matrices(self) -> dict[int, FloatArray]:
        matrices: dict[int, FloatArray] = {}
        for level in range(LEAF_LEVEL + 1, self._levels + 1):
            node_ids = self._level_ids[level]
            matrix = np.zeros((self.leaf_count, len(node_ids)), dtype=np.float64)
            for column, node_id in enumerate(node_ids):
                matrix[sorted(self._descendants[node_id]), column] = 1.0
            matrix.setflags(write=False)
            matrices[level] = matrix
        return matrices

    @property
    def levels(self) -> int:
        return self._levels

    @property
    def leaf_count(self) -> int:
        return len(self._level_ids[LEAF_LEVEL])

    @property
    def nodes(self) -> Mapping[int, HierarchyNode]:
        return self._nodes

    def level_node_ids(self, level: int) -> tuple[int, ...]:
        """Node ids at `level`, ascending."""
        if level not in self._level_ids:
            raise HierarchyError(f"Level {level} is outside 1..{self._levels}.")
        return self._level_ids[level]

    def node_count(self, level: int) -> int:
        return len(self.level_node_ids(level))

    def descendant_leaves(self, node_id: int) -> frozenset[int]:
        """Leaves reachable from `node_id` through child edges (a leaf maps to itself)."""
        try:
            return self._descendants[node_id]
        except KeyError:
            raise UnknownNodeError("Unknown node id.", node_id) from None

    def level_matrix(self, level: int) -> FloatArray:
        """Read-only k×k_m membership matrix: entry (leaf, column) is 1 when the leaf descends from that node."""
        if level not in self._level_matrices:
            raise HierarchyError(
                f"Level {level} has no membership matrix (valid: 2..{self._levels})."
            )
        return self._level_matrices[level]

    def siblings_by_leaf(self) -> list[frozenset[int]]:
        """For each leaf, the leaves sharing at least one level-2 parent (excluding itself)."""
        if self._levels < LEAF_LEVEL + 1:
            return [frozenset() for _ in range(self.leaf_count)]
        groups = [self._descendants[n] for n in self._level_ids[LEAF_LEVEL + 1]]
        return [
            frozenset().union(*(g for g in groups if leaf in g)) - {leaf}
            for leaf in range(self.leaf_count)
        ]

    def __repr__(self) -> str:
        counts = ", ".join(str(self.node_count(m)) for m in range(1, self._levels + 1))
        return f"HierarchyTree(levels={self._levels}, nodes per level=[{counts}])"


def parse_hierarchy(text: str | bytes) -> HierarchyTree:
    """Parse and validate a hierarchy file.

    Args:
        text: UTF-8 JSON content `{"levels": M, "nodes": [...]}`

    Returns:
        Validated HierarchyTree

    Raises:
        HierarchyMalformedError: Syntax or schema problems, unknown parents, bad leaf ids
        DuplicateNodeError: Two nodes share an id
        HierarchyCycleError: Parent edges loop back
        WrongParentLevelError: A parent is not exactly one level above
        OrphanNodeError: A node below the top level has no parent
    """
    raw = text.decode("utf-8") if isinstance(text, bytes) else text
    if not raw.strip():
        raise HierarchyMalformedError("Hierarchy file is empty.")
    try:
        parsed = HierarchyFile.model_validate_json(text)
    except ValidationError as error:
        details = "; ".join(
            f"{'.'.join(str(loc) for loc in e['loc'])}: {e['msg']}"
            for e in error.errors()
        )
        raise HierarchyMalformedError(f"Invalid hierarchy file ({details}).") from error
    return HierarchyTree(parsed.levels, parsed.nodes)


def to_json(tree: HierarchyTree) -> str:
    """Serialize a tree back to the hierarchy file format (nodes ordered by id)."""
    return HierarchyFile(
        levels=tree.levels,
        nodes=[tree.nodes[node_id] for node_id in sorted(tree.nodes)],
    ).model_dump_json(indent=2)


def descendant_leaves(tree: HierarchyTree, node_id: int) -> set[int]:
    return set(tree.descendant_leaves(node_id))


def derive_level_label_matrix(
    tree: HierarchyTree, leaf_labels: npt.ArrayLike
) -> dict[int, BinaryArray]:
    """OR-propagate a batch×k leaf label matrix to every parent level.

    Returns:
        Mapping level (2..M) -> batch×k_m binary matrix
    """
    labels = np.asarray(leaf_labels)
    if labels.ndim != 2 or labels.shape[1] != tree.leaf_count:  # noqa: PLR2004
        raise LabelMismatchError(
            f"Expected batch×{tree.leaf_count} labels, got shape {labels.shape}."
        )
    positive = labels.astype(np.float64)
    return {
        level: (positive @ tree.level_matrix(level) > 0).astype(np.uint8)
        for level in range(LEAF_LEVEL + 1, tree.levels + 1)
    }


def derive_level_labels(
    tree: HierarchyTree, leaf_labels: npt.ArrayLike
) -> dict[int, BinaryArray]:
    """Parent label vectors for levels 2..M: a parent is 1 iff one of its descendant leaves is 1."""
    labels = np.asarray(leaf_labels)
    if labels.ndim != 1 or labels.shape[0] != tree.leaf_count:
        raise LabelMismatchError(
            f"Expected {tree.leaf_count} leaf labels, got shape {labels.shape}."
        )
    return {
        level: matrix[0]
        for level, matrix in derive_level_label_matrix(tree, labels[None, :]).items()
    }


def balanced_tree(leaf_count: int, group_sizes: Sequence[int]) -> HierarchyTree:
    """Build a regular hierarchy with len(group_sizes) + 1 levels.

    `group_sizes[i]` is how many level-(i+1) nodes share one level-(i+2)
    parent. Children are dealt to parents round-robin, so with classes
    sorted by frequency every parent mixes frequent and rare classes.
    """
    level_counts = [leaf_count]
    for size in group_sizes:
        if size < 1 or level_counts[-1] % size:
            raise HierarchyMalformedError(
                f"Cannot group {level_counts[-1]} nodes into parents of {size}."
            )
        level_counts.append(level_counts[-1] // size)

    nodes: list[HierarchyNode] = []
    first_id = 0
    for depth, count in enumerate(level_counts):
        level = depth + LEAF_LEVEL
        parent_first_id = first_id + count
        parent_count = level_counts[depth + 1] if depth + 1 < len(level_counts) else 0
        for index in range(count):
            node_id = first_id + index
            nodes.append(
                HierarchyNode(
                    id=node_id,
                    name=f"class-{index}" if level == LEAF_LEVEL else f"L{level}-{index}",
                    level=level,
                    parents=(
                        frozenset((parent_first_id + index % parent_count,))
                        if parent_count
                        else frozenset()
                    ),
                )
            )
        first_id = parent_first_id
    return HierarchyTree(len(level_counts), nodes)
