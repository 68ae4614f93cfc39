from src.domain.dataset.entities.multilabel_dataset import DatasetSplits
from src.domain.dataset.entities.multilabel_dataset import MultiLabelDataset
from src.domain.dataset.entities.multilabel_dataset import Split
from src.domain.dataset.errors import DatasetError
from src.domain.dataset.errors import DatasetErrorCode
from src.domain.dataset.errors import EmptyClassError
from src.domain.dataset.errors import InfeasibleConfigError
from src.domain.dataset.errors import InvalidDatasetError
from src.domain.dataset.errors import InvalidThresholdsError
from src.domain.dataset.errors import ShapeMismatchError
from src.domain.dataset.errors import TruncatedDatasetError
from src.domain.dataset.subset import subset_indices
from src.domain.dataset.subset import train_subset
from src.domain.dataset.synthetic import SynthConfig
from src.domain.dataset.synthetic import SyntheticSplits
from src.domain.dataset.synthetic import generate_synthetic
from src.domain.dataset.value_objects.dataset_stats import DatasetStats
from src.domain.dataset.value_objects.dataset_stats import compute_stats
from src.domain.dataset.value_objects.group_assignment import GroupAssignment
from src.domain.dataset.value_objects.group_assignment import GroupThresholds
from src.domain.dataset.value_objects.group_assignment import RatioThresholds
from src.domain.dataset.value_objects.group_assignment import ShotGroup
from src.domain.dataset.value_objects.group_assignment import assign_groups
from src.domain.dataset.value_objects.group_assignment import assign_groups_by_ratio

__all__ = [
    "DatasetError",
    "DatasetErrorCode",
    "DatasetSplits",
    "DatasetStats",
    "EmptyClassError",
    "GroupAssignment",
    "GroupThresholds",
    "InfeasibleConfigError",
    "InvalidDatasetError",
    "InvalidThresholdsError",
    "MultiLabelDataset",
    "RatioThresholds",
    "ShapeMismatchError",
    "ShotGroup",
    "Split",
    "SynthConfig",
    "SyntheticSplits",
    "TruncatedDatasetError",
    "assign_groups",
    "assign_groups_by_ratio",
    "compute_stats",
    "generate_synthetic",
    "subset_indices",
    "train_subset",
]
