from abc import ABC
from abc import abstractmethod
from pathlib import Path

from src.domain.dataset.entities.multilabel_dataset import DatasetSplits
from src.domain.dataset.entities.multilabel_dataset import MultiLabelDataset
from src.domain.hierarchy.entities.hierarchy_tree import HierarchyTree


class DatasetRepository(ABC):
    """Port for dataset and hierarchy persistence.

    A dataset root holds `hierarchy.json` and one directory per split.
    """

    @abstractmethod
    def save(self, dataset: MultiLabelDataset, directory: Path) -> None: ...

    @abstractmethod
    def load(self, directory: Path) -> MultiLabelDataset:
        """Read one split directory.

        Raises:
            ShapeMismatchError: If the files disagree with the manifest
            TruncatedDatasetError: If a file is empty or too short
        """
        ...

    @abstractmethod
    def is_split(self, directory: Path) -> bool:
        """Whether `directory` is a single split rather than a dataset root."""
        ...

    @abstractmethod
    def save_hierarchy(self, tree: HierarchyTree, path: Path) -> None: ...

    @abstractmethod
    def load_hierarchy(self, path: Path) -> HierarchyTree: ...

    @abstractmethod
    def save_root(self, root: Path, splits: DatasetSplits, tree: HierarchyTree) -> None: ...

    @abstractmethod
    def load_root(self, root: Path) -> tuple[DatasetSplits, HierarchyTree]: ...
