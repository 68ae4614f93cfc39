from pathlib import Path
from unittest.mock import MagicMock

import pytest

from src.application.data.ports.dataset_repository import DatasetRepository
from src.application.evaluation.ports.report_repository import ReportRepository
from src.application.evaluation.use_cases.aggregate_reports import AggregateReports
from src.application.evaluation.use_cases.evaluate_checkpoint import EvaluateCheckpoint
from src.application.evaluation.use_cases.evaluate_checkpoint import train_groups
from src.application.training.ports.checkpoint_repository import CheckpointRepository
from src.domain.dataset.entities.multilabel_dataset import DatasetSplits
from src.domain.dataset.entities.multilabel_dataset import Split
from src.domain.dataset.value_objects.group_assignment import GroupThresholds
from src.domain.dataset.value_objects.group_assignment import assign_groups
from src.domain.evaluation.errors import StructureMismatchError
from src.domain.evaluation.eval_report import EvalReport
from src.domain.evaluation.eval_report import build_report
from src.domain.hierarchy.entities.hierarchy_tree import HierarchyTree
from src.domain.model.model_bundle import init_model

THRESHOLDS = GroupThresholds(t_many=40, t_few=10)


def _report(score_shift: float) -> EvalReport:
    groups = assign_groups([200, 5], (100, 10))
    scores = [[0.9, 0.2 + score_shift], [0.1, 0.8], [0.5, 0.4]]
    labels = [[1, 0], [0, 1], [1, 1]]
    return build_report(scores, labels, groups, split="val")


@pytest.fixture
def mock_report_repository() -> MagicMock:
    """Create a mock ReportRepository."""
    return MagicMock(spec=ReportRepository)


class TestAggregateReportsExecute:
    """Test AggregateReports.execute() method."""

    def test_execute_aggregates_found_reports(
        self, mock_report_repository: MagicMock, tmp_path: Path
    ) -> None:
        """Test that every seed report is loaded and the aggregate written."""
        paths = [tmp_path / "seed0/reports/final_val.json", tmp_path / "seed1/reports/final_val.json"]
        mock_report_repository.find_reports.return_value = paths
        mock_report_repository.load_report.side_effect = [_report(0.0), _report(0.7)]

        aggregated = AggregateReports(mock_report_repository).execute(
            tmp_path, Split.VAL, tmp_path / "out"
        )

        mock_report_repository.find_reports.assert_called_once_with(
            tmp_path, "*/reports/final_val.json"
        )
        mock_report_repository.save_report.assert_called_once_with(
            aggregated, tmp_path / "out" / "aggregate_val.json"
        )
        assert len(aggregated.trials) == 2  # noqa: PLR2004
        assert aggregated.std is not None
        assert aggregated.std.average > 0

    def test_execute_without_reports_raises(
        self, mock_report_repository: MagicMock, tmp_path: Path
    ) -> None:
        """Test that an empty runs directory is an error."""
        mock_report_repository.find_reports.return_value = []

        with pytest.raises(StructureMismatchError, match="final_test.json"):
            AggregateReports(mock_report_repository).execute(tmp_path, Split.TEST, tmp_path)

        mock_report_repository.save_report.assert_not_called()


class TestEvaluateCheckpointExecute:
    """Test EvaluateCheckpoint.execute() method."""

    @pytest.fixture
    def use_case(
        self,
        mock_report_repository: MagicMock,
        small_splits: DatasetSplits,
        small_tree: HierarchyTree,
    ) -> EvaluateCheckpoint:
        """Create EvaluateCheckpoint with a random model and the small dataset."""
        checkpoints = MagicMock(spec=CheckpointRepository)
        checkpoints.load.return_value = init_model(5, (8,), 4, 6, seed=0)
        datasets = MagicMock(spec=DatasetRepository)
        datasets.load_root.return_value = (small_splits, small_tree)
        return EvaluateCheckpoint(checkpoints, datasets, mock_report_repository)

    def test_execute_reports_val_and_test(
        self, use_case: EvaluateCheckpoint, mock_report_repository: MagicMock, tmp_path: Path
    ) -> None:
        """Test that both held-out splits are scored and written."""
        reports = use_case.execute(tmp_path / "final", tmp_path / "data", THRESHOLDS, out=tmp_path)

        assert set(reports) == {Split.VAL, Split.TEST}
        assert reports[Split.TEST].split == "test"
        saved = [c.args[1] for c in mock_report_repository.save_report.call_args_list]
        assert saved == [tmp_path / "final_val.json", tmp_path / "final_test.json"]

    def test_execute_without_out_writes_nothing(
        self, use_case: EvaluateCheckpoint, mock_report_repository: MagicMock, tmp_path: Path
    ) -> None:
        """Test that reports are only returned when no output directory is given."""
        reports = use_case.execute(
            tmp_path / "final", tmp_path / "data", THRESHOLDS, splits=(Split.VAL,)
        )

        assert list(reports) == [Split.VAL]
        mock_report_repository.save_report.assert_not_called()

    def test_groups_come_from_train(self, small_splits: DatasetSplits) -> None:
        """Test that shot groups use training counts."""
        groups = train_groups(small_splits, THRESHOLDS)

        assert groups.class_counts == tuple(small_splits.train.class_counts.tolist())
