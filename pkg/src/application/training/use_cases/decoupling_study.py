from pathlib import Path

from src.application.evaluation.ports.report_repository import CsvCell
from src.application.evaluation.ports.report_repository import ReportRepository
from src.application.evaluation.use_cases.evaluate_checkpoint import train_groups
from src.application.training.config import DecouplingSettings
from src.application.training.use_cases.ablation_grid import METRIC_HEADER
from src.application.training.use_cases.ablation_grid import metric_cells
from src.application.training.use_cases.ablation_grid import summarize_trials
from src.application.training.use_cases.run_pipeline import REPORTS_DIR
from src.application.training.use_cases.run_pipeline import RunPipeline
from src.domain.dataset.entities.multilabel_dataset import DatasetSplits
from src.domain.dataset.entities.multilabel_dataset import Split
from src.domain.evaluation.eval_report import EvalReport
from src.domain.evaluation.eval_report import evaluate
from src.domain.hierarchy.entities.hierarchy_tree import HierarchyTree

DECOUPLING_FILE = "decoupling.csv"
DECOUPLING_HEADER = ("row", "representation_fraction", "classifier_fraction", *METRIC_HEADER)


def pair_name(representation: float, classifier: float) -> str:
    return f"r{representation:g}_c{classifier:g}"


class DecouplingStudy:
    """How far a classifier re-trained on more data lifts a representation learned on less.

    Each row learns the extractor on one share of the train split, freezes
    it, and re-trains the classifier with ICS on another share.
    """

    def __init__(self, pipeline: RunPipeline, report_repository: ReportRepository) -> None:
        self._pipeline = pipeline
        self._report_repository = report_repository

    def execute(
        self,
        data: DatasetSplits,
        tree: HierarchyTree,
        settings: DecouplingSettings,
        out: Path,
    ) -> dict[str, EvalReport]:
        """Write `<out>/decoupling.csv` and one report per row under `<out>/reports/`.

        Raises:
            TrainingError: If a phase fails (divergence, tree mismatch)
            EvaluationError: If the split cannot be evaluated
        """
        split = Split(settings.split)
        groups = train_groups(data, settings.train.group_thresholds)
        results: dict[str, EvalReport] = {}
        rows: list[tuple[CsvCell, ...]] = []
        for representation, classifier in settings.pairs():
            name = pair_name(representation, classifier)
            trials = []
            for seed in settings.seeds:
                cfg = settings.apply(representation, classifier).model_copy(update={"seed": seed})
                outcome = self._pipeline.train(data, tree, cfg)
                trials.append(evaluate(outcome.final_model, data.get(split), groups))
            report = summarize_trials(trials)
            self._report_repository.save_report(report, out / REPORTS_DIR / f"{name}_{split}.json")
            results[name] = report
            rows.append((name, representation, classifier, *metric_cells(len(trials), report)))

        self._report_repository.save_table(DECOUPLING_HEADER, rows, out / DECOUPLING_FILE)
        return results
