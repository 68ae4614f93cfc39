from pathlib import Path

from pydantic import BaseModel
from pydantic import ConfigDict

from src.application.data.ports.dataset_repository import DatasetRepository
from src.domain.dataset.entities.multilabel_dataset import MultiLabelDataset
from src.domain.dataset.value_objects.dataset_stats import DatasetStats
from src.domain.dataset.value_objects.dataset_stats import compute_stats
from src.domain.dataset.value_objects.group_assignment import GroupAssignment
from src.domain.dataset.value_objects.group_assignment import GroupThresholds
from src.domain.dataset.value_objects.group_assignment import assign_groups


class DatasetDescription(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    sizes: dict[str, int]
    stats: dict[str, DatasetStats]
    groups: GroupAssignment


class DescribeDataset:
    """ρ, L_Card, class counts and shot groups of a dataset root or a single split."""

    def __init__(self, dataset_repository: DatasetRepository) -> None:
        self._dataset_repository = dataset_repository

    def execute(self, data: Path, thresholds: GroupThresholds) -> DatasetDescription:
        """Describe every split; groups come from the train split (or the only split given).

        Raises:
            EmptyClassError: If a split has a class without positives
        """
        datasets: list[MultiLabelDataset]
        if self._dataset_repository.is_split(data):
            datasets = [self._dataset_repository.load(data)]
        else:
            splits, _ = self._dataset_repository.load_root(data)
            datasets = list(splits.by_split().values())

        return DatasetDescription(
            sizes={str(ds.split): ds.n for ds in datasets},
            stats={str(ds.split): compute_stats(ds.labels) for ds in datasets},
            groups=assign_groups(datasets[0].class_counts.tolist(), thresholds),
        )
