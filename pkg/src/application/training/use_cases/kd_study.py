from pathlib import Path

from src.application.evaluation.ports.report_repository import CsvCell
from src.application.evaluation.ports.report_repository import ReportRepository
from src.application.evaluation.use_cases.evaluate_checkpoint import train_groups
from src.application.training.config import KdStudySettings
from src.application.training.use_cases.ablation_grid import METRIC_HEADER
from src.application.training.use_cases.ablation_grid import metric_cells
from src.application.training.use_cases.ablation_grid import summarize_trials
from src.application.training.use_cases.run_pipeline import REPORTS_DIR
from src.application.training.use_cases.run_pipeline import ModelName
from src.application.training.use_cases.run_pipeline import RunPipeline
from src.domain.dataset.entities.multilabel_dataset import DatasetSplits
from src.domain.dataset.entities.multilabel_dataset import Split
from src.domain.evaluation.eval_report import EvalReport
from src.domain.evaluation.eval_report import evaluate
from src.domain.hierarchy.entities.hierarchy_tree import HierarchyTree

KD_STUDY_FILE = "kd_study.csv"
KD_STUDY_HEADER = ("point", "mode", "temperature", "alpha", "beta", *METRIC_HEADER)


class KdStudy:
    """Distillation sweep over temperature and weight for hybrid, feature-only and logits-only KD."""

    def __init__(self, pipeline: RunPipeline, report_repository: ReportRepository) -> None:
        self._pipeline = pipeline
        self._report_repository = report_repository

    def execute(
        self,
        data: DatasetSplits,
        tree: HierarchyTree,
        settings: KdStudySettings,
        out: Path,
    ) -> dict[str, EvalReport]:
        """Write `<out>/kd_study.csv` and one report per sweep point under `<out>/reports/`.

        Both teachers are trained once per seed; every point then distills a
        fresh student from them. Without ICS the first teacher also serves as
        the logits teacher.

        Raises:
            TrainingError: If a phase fails (divergence, tree mismatch)
            EvaluationError: If the split cannot be evaluated
        """
        split = Split(settings.split)
        groups = train_groups(data, settings.train.group_thresholds)
        points = settings.points()
        trials: dict[str, list[EvalReport]] = {point.name: [] for point in points}
        for seed in settings.seeds:
            cfg = settings.train.model_copy(update={"seed": seed, "use_hybrid_kd": False})
            teachers = self._pipeline.train(data, tree, cfg).models
            teacher1 = teachers[ModelName.TEACHER1]
            teacher2 = teachers.get(ModelName.TEACHER2, teacher1)
            for point in points:
                student = self._pipeline.distill(data, tree, point.apply(cfg), teacher1, teacher2)
                trials[point.name].append(evaluate(student.model, data.get(split), groups))

        results: dict[str, EvalReport] = {}
        rows: list[tuple[CsvCell, ...]] = []
        for point in points:
            report = summarize_trials(trials[point.name])
            self._report_repository.save_report(
                report, out / REPORTS_DIR / f"{point.name}_{split}.json"
            )
            results[point.name] = report
            rows.append(
                (
                    point.name,
                    point.mode.value,
                    point.temperature,
                    point.alpha,
                    point.beta,
                    *metric_cells(len(settings.seeds), report),
                )
            )

        self._report_repository.save_table(KD_STUDY_HEADER, rows, out / KD_STUDY_FILE)
        return results
