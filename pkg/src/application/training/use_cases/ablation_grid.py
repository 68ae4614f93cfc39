from pathlib import Path

from src.application.evaluation.ports.report_repository import CsvCell
from src.application.evaluation.ports.report_repository import ReportRepository
from src.application.evaluation.use_cases.evaluate_checkpoint import train_groups
from src.application.training.config import AblationSettings
from src.application.training.config import Component
from src.application.training.config import ComponentToggles
from src.application.training.use_cases.run_pipeline import REPORTS_DIR
from src.application.training.use_cases.run_pipeline import RunPipeline
from src.domain.dataset.entities.multilabel_dataset import DatasetSplits
from src.domain.dataset.entities.multilabel_dataset import Split
from src.domain.dataset.value_objects.group_assignment import ShotGroup
from src.domain.evaluation.aggregate import aggregate_trials
from src.domain.evaluation.eval_report import EvalReport
from src.domain.evaluation.eval_report import evaluate
from src.domain.hierarchy.entities.hierarchy_tree import HierarchyTree

ABLATION_FILE = "ablation.csv"
METRIC_HEADER = (
    "seeds",
    "average",
    "average_std",
    *(column for g in ShotGroup for column in (g.value, f"{g.value}_std")),
    "all_class_map",
    "all_class_map_std",
)
ABLATION_HEADER = ("row", *(c.value for c in Component), *METRIC_HEADER)


def summarize_trials(trials: list[EvalReport]) -> EvalReport:
    """A single trial as is, several as mean ± sample std."""
    return trials[0] if len(trials) == 1 else aggregate_trials(trials)


def metric_cells(seeds: int, report: EvalReport) -> tuple[CsvCell, ...]:
    """The METRIC_HEADER columns of one summarized report."""
    std = report.std
    groups: list[CsvCell] = []
    for group in ShotGroup:
        groups.append(report.group_map.get(group))
        groups.append(None if std is None else std.group_map.get(group))
    return (
        seeds,
        report.average,
        None if std is None else std.average,
        *groups,
        report.all_class_map,
        None if std is None else std.all_class_map,
    )


def _table_row(toggles: ComponentToggles, seeds: int, report: EvalReport) -> tuple[CsvCell, ...]:
    return (
        toggles.name,
        *(int(getattr(toggles, c.value)) for c in Component),
        *metric_cells(seeds, report),
    )


class AblationGrid:
    """One pipeline per component row and seed; the final model of each run is evaluated.

    Rows with several seeds are aggregated to mean ± sample std; a single
    seed leaves the std columns empty.
    """

    def __init__(self, pipeline: RunPipeline, report_repository: ReportRepository) -> None:
        self._pipeline = pipeline
        self._report_repository = report_repository

    def execute(
        self,
        data: DatasetSplits,
        tree: HierarchyTree,
        settings: AblationSettings,
        out: Path,
    ) -> dict[str, EvalReport]:
        """Write `<out>/ablation.csv` and one report per row under `<out>/reports/`."""
        split = Split(settings.split)
        groups = train_groups(data, settings.train.group_thresholds)
        results: dict[str, EvalReport] = {}
        rows: list[tuple[CsvCell, ...]] = []
        for toggles in settings.toggles():
            trials = []
            for seed in settings.seeds:
                cfg = toggles.apply(settings.train).model_copy(update={"seed": seed})
                outcome = self._pipeline.train(data, tree, cfg)
                trials.append(evaluate(outcome.final_model, data.get(split), groups))
            report = summarize_trials(trials)
            self._report_repository.save_report(
                report, out / REPORTS_DIR / f"{toggles.name}_{split}.json"
            )
            results[toggles.name] = report
            rows.append(_table_row(toggles, len(trials), report))

        self._report_repository.save_table(ABLATION_HEADER, rows, out / ABLATION_FILE)
        return results
