from dataclasses import dataclass
from enum import StrEnum
from pathlib import Path

from pydantic import BaseModel
from pydantic import ConfigDict

from src.application.evaluation.ports.report_repository import ReportRepository
from src.application.evaluation.use_cases.evaluate_checkpoint import report_splits
from src.application.evaluation.use_cases.evaluate_checkpoint import train_groups
from src.application.training.config import TrainConfig
from src.application.training.config import config_hash
from src.application.training.errors import MissingTeacherError
from src.application.training.errors import TrainingError
from src.application.training.loop import PhaseResult
from src.application.training.ports.checkpoint_repository import CheckpointRepository
from src.application.training.ports.run_record_repository import RunRecordRepository
from src.application.training.ports.training_monitor import TrainingMonitor
from src.application.training.use_cases.train_phases import TrainPhase1
from src.application.training.use_cases.train_phases import TrainPhase2
from src.application.training.use_cases.train_phases import TrainPhase3
from src.domain.dataset.entities.multilabel_dataset import DatasetSplits
from src.domain.evaluation.ap_delta import ap_delta_csv
from src.domain.evaluation.ap_delta import ap_delta_report
from src.domain.hierarchy.entities.hierarchy_tree import HierarchyTree
from src.domain.model.model_bundle import ModelBundle


class ModelName(StrEnum):
    TEACHER1 = "teacher1"
    TEACHER2 = "teacher2"
    STUDENT = "student"


PHASE_MODEL = {1: ModelName.TEACHER1, 2: ModelName.TEACHER2, 3: ModelName.STUDENT}
RECORDS_DIR = "records"
REPORTS_DIR = "reports"
MANIFEST_FILE = "pipeline.json"


def final_model_name(cfg: TrainConfig) -> ModelName:
    if cfg.use_hybrid_kd:
        return ModelName.STUDENT
    if cfg.use_ics:
        return ModelName.TEACHER2
    return ModelName.TEACHER1


def record_path(run_dir: Path, phase: int) -> Path:
    return run_dir / RECORDS_DIR / f"phase{phase}.jsonl"


@dataclass(frozen=True, eq=False)
class PipelineOutcome:
    """Trained models keyed by name and the phase results that produced them."""

    results: dict[int, PhaseResult]
    final: ModelName

    @property
    def phases(self) -> tuple[int, ...]:
        return tuple(sorted(self.results))

    @property
    def models(self) -> dict[ModelName, ModelBundle]:
        return {PHASE_MODEL[phase]: self.results[phase].model for phase in self.phases}

    @property
    def final_model(self) -> ModelBundle:
        return self.models[self.final]


class PipelineManifest(BaseModel):
    """Index of everything a pipeline run wrote; paths are relative to the run directory."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    config_hash: str
    seed: int
    phases: tuple[int, ...]
    final_model: ModelName
    checkpoints: dict[str, str]
    records: dict[str, str]
    reports: dict[str, str]


class RunPipeline:
    """End-to-end three-phase training, following the component toggles of the config.

    Phase 2 runs when ICS is on, phase 3 when hybrid distillation is on.
    Without phase 2 the first teacher also serves as the logits teacher.
    """

    def __init__(
        self,
        checkpoint_repository: CheckpointRepository,
        run_record_repository: RunRecordRepository,
        report_repository: ReportRepository,
        monitor: TrainingMonitor,
    ) -> None:
        self._checkpoint_repository = checkpoint_repository
        self._run_record_repository = run_record_repository
        self._report_repository = report_repository
        self._phase1 = TrainPhase1(monitor)
        self._phase2 = TrainPhase2(monitor)
        self._phase3 = TrainPhase3(monitor)

    def train(self, data: DatasetSplits, tree: HierarchyTree, cfg: TrainConfig) -> PipelineOutcome:
        """Run the enabled phases in memory, writing nothing."""
        results = {1: self._phase1.execute(data, tree, cfg)}
        teacher1 = results[1].model
        teacher2 = teacher1
        if cfg.use_ics:
            results[2] = self._phase2.execute(data, tree, cfg, init_from=teacher1)
            teacher2 = results[2].model
        if cfg.use_hybrid_kd:
            results[3] = self.distill(data, tree, cfg, teacher1, teacher2)
        return PipelineOutcome(results=results, final=final_model_name(cfg))

    def distill(
        self,
        data: DatasetSplits,
        tree: HierarchyTree,
        cfg: TrainConfig,
        teacher1: ModelBundle,
        teacher2: ModelBundle,
    ) -> PhaseResult:
        """Phase 3 alone, for sweeps that reuse already trained teachers."""
        return self._phase3.execute(data, tree, cfg, teacher1, teacher2)

    def execute(
        self, data: DatasetSplits, tree: HierarchyTree, cfg: TrainConfig, out: Path
    ) -> PipelineManifest:
        """Train, then write checkpoints, records, val/test reports and the manifest under `out`.

        Raises:
            TrainingError: If a phase fails (divergence, tree mismatch)
            EvaluationError: If a split cannot be evaluated
        """
        outcome = self.train(data, tree, cfg)

        checkpoints: dict[str, str] = {}
        records: dict[str, str] = {}
        for phase, result in outcome.results.items():
            name = PHASE_MODEL[phase]
            self._checkpoint_repository.save(result.model, out / name, result.step)
            self._run_record_repository.save(result.record, record_path(out, phase))
            checkpoints[name] = str(name)
            records[str(phase)] = record_path(Path(), phase).as_posix()

        groups = train_groups(data, cfg.group_thresholds)
        reports: dict[str, str] = {}
        evaluated = {
            name: report_splits(model, data, groups) for name, model in outcome.models.items()
        }
        for name, split_reports in evaluated.items():
            for split, report in split_reports.items():
                relative = f"{REPORTS_DIR}/{name}_{split}.json"
                self._report_repository.save_report(report, out / relative)
                reports[f"{name}_{split}"] = relative
                if name == outcome.final:
                    relative = f"{REPORTS_DIR}/final_{split}.json"
                    self._report_repository.save_report(report, out / relative)
                    reports[f"final_{split}"] = relative

        if outcome.final != ModelName.TEACHER1:
            baseline = evaluated[ModelName.TEACHER1]
            for split, report in evaluated[outcome.final].items():
                relative = f"{REPORTS_DIR}/ap_delta_{split}.csv"
                rows = ap_delta_report(baseline[split], report, groups)
                self._report_repository.save_text(ap_delta_csv(rows), out / relative)
                reports[f"ap_delta_{split}"] = relative

        manifest = PipelineManifest(
            config_hash=config_hash(cfg),
            seed=cfg.seed,
            phases=outcome.phases,
            final_model=outcome.final,
            checkpoints=checkpoints,
            records=records,
            reports=reports,
        )
        self._report_repository.save_document(manifest, out / MANIFEST_FILE)
        return manifest


class RunPhase:
    """Train a single phase inside a run directory, reusing teachers already stored there."""

    def __init__(
        self,
        checkpoint_repository: CheckpointRepository,
        run_record_repository: RunRecordRepository,
        monitor: TrainingMonitor,
    ) -> None:
        self._checkpoint_repository = checkpoint_repository
        self._run_record_repository = run_record_repository
        self._phase1 = TrainPhase1(monitor)
        self._phase2 = TrainPhase2(monitor)
        self._phase3 = TrainPhase3(monitor)

    def _teacher(self, run_dir: Path, name: ModelName) -> ModelBundle:
        if not self._checkpoint_repository.exists(run_dir / name):
            raise MissingTeacherError(name)
        return self._checkpoint_repository.load(run_dir / name)

    def execute(
        self,
        data: DatasetSplits,
        tree: HierarchyTree,
        cfg: TrainConfig,
        phase: int,
        run_dir: Path,
    ) -> PhaseResult:
        """Train `phase` and store its checkpoint and record in `run_dir`.

        Raises:
            MissingTeacherError: If phase 2 or 3 runs before the teachers it needs
        """
        match phase:
            case 1:
                result = self._phase1.execute(data, tree, cfg)
            case 2:
                teacher1 = self._teacher(run_dir, ModelName.TEACHER1)
                result = self._phase2.execute(data, tree, cfg, init_from=teacher1)
            case 3:
                teacher1 = self._teacher(run_dir, ModelName.TEACHER1)
                teacher2 = (
                    self._teacher(run_dir, ModelName.TEACHER2) if cfg.use_ics else teacher1
                )
                result = self._phase3.execute(data, tree, cfg, teacher1, teacher2)
            case _:
                raise TrainingError(f"Unknown phase {phase}; expected 1, 2 or 3.")

        self._checkpoint_repository.save(result.model, run_dir / PHASE_MODEL[phase], result.step)
        self._run_record_repository.save(result.record, record_path(run_dir, phase))
        return result
