from pathlib import Path

from src.application.evaluation.ports.report_repository import ReportRepository
from src.domain.dataset.entities.multilabel_dataset import Split
from src.domain.evaluation.aggregate import aggregate_trials
from src.domain.evaluation.eval_report import EvalReport
from src.domain.evaluation.errors import StructureMismatchError


class AggregateReports:
    """Mean ± std of the final-model reports of several seed run directories."""

    def __init__(self, report_repository: ReportRepository) -> None:
        self._report_repository = report_repository

    def execute(self, runs: Path, split: Split, out: Path) -> EvalReport:
        """Aggregate `<runs>/*/reports/final_<split>.json` into `<out>/aggregate_<split>.json`.

        Raises:
            StructureMismatchError: If fewer than two run reports are found
                or they disagree on class structure
        """
        paths = self._report_repository.find_reports(runs, f"*/reports/final_{split}.json")
        if not paths:
            raise StructureMismatchError(f"No final_{split}.json report found under {runs}.")
        aggregated = aggregate_trials(
            [self._report_repository.load_report(path) for path in paths]
        )
        self._report_repository.save_report(aggregated, out / f"aggregate_{split}.json")
        return aggregated
