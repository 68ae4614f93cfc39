from src.domain.hierarchy.entities.hierarchy_tree import HierarchyNode
from src.domain.hierarchy.entities.hierarchy_tree import HierarchyTree
from src.domain.hierarchy.entities.hierarchy_tree import balanced_tree
from src.domain.hierarchy.entities.hierarchy_tree import derive_level_label_matrix
from src.domain.hierarchy.entities.hierarchy_tree import derive_level_labels
from src.domain.hierarchy.entities.hierarchy_tree import descendant_leaves
from src.domain.hierarchy.entities.hierarchy_tree import parse_hierarchy
from src.domain.hierarchy.entities.hierarchy_tree import to_json

__all__ = [
    "HierarchyNode",
    "HierarchyTree",
    "balanced_tree",
    "derive_level_label_matrix",
    "derive_level_labels",
    "descendant_leaves",
    "parse_hierarchy",
    "to_json",
]
