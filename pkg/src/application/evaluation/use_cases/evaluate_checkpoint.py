from pathlib import Path

from src.application.data.ports.dataset_repository import DatasetRepository
from src.application.evaluation.ports.report_repository import ReportRepository
from src.application.training.ports.checkpoint_repository import CheckpointRepository
from src.domain.dataset.entities.multilabel_dataset import DatasetSplits
from src.domain.dataset.entities.multilabel_dataset import Split
from src.domain.dataset.value_objects.group_assignment import GroupAssignment
from src.domain.dataset.value_objects.group_assignment import GroupThresholds
from src.domain.dataset.value_objects.group_assignment import assign_groups
from src.domain.evaluation.eval_report import EvalReport
from src.domain.evaluation.eval_report import evaluate
from src.domain.model.model_bundle import ModelBundle

REPORTED_SPLITS = (Split.VAL, Split.TEST)


def train_groups(data: DatasetSplits, thresholds: GroupThresholds) -> GroupAssignment:
    """Shot groups always come from the training split's class counts."""
    return assign_groups(data.train.class_counts.tolist(), thresholds)


def report_splits(
    model: ModelBundle,
    data: DatasetSplits,
    groups: GroupAssignment,
    splits: tuple[Split, ...] = REPORTED_SPLITS,
) -> dict[Split, EvalReport]:
    return {split: evaluate(model, data.get(split), groups) for split in splits}


class EvaluateCheckpoint:
    """Score a stored checkpoint on the val and/or test split of a dataset root."""

    def __init__(
        self,
        checkpoint_repository: CheckpointRepository,
        dataset_repository: DatasetRepository,
        report_repository: ReportRepository,
    ) -> None:
        self._checkpoint_repository = checkpoint_repository
        self._dataset_repository = dataset_repository
        self._report_repository = report_repository

    def execute(
        self,
        checkpoint: Path,
        data: Path,
        thresholds: GroupThresholds,
        splits: tuple[Split, ...] = REPORTED_SPLITS,
        out: Path | None = None,
    ) -> dict[Split, EvalReport]:
        """Evaluate `checkpoint` and optionally write `<out>/<checkpoint name>_<split>.json`.

        Raises:
            FileNotFoundError: If the checkpoint or the dataset is missing
            EvaluationError: If a split cannot be evaluated
        """
        model = self._checkpoint_repository.load(checkpoint)
        splits_data, _ = self._dataset_repository.load_root(data)
        reports = report_splits(
            model, splits_data, train_groups(splits_data, thresholds), splits
        )
        if out is not None:
            for split, report in reports.items():
                self._report_repository.save_report(
                    report, out / f"{checkpoint.name}_{split}.json"
                )
        return reports
