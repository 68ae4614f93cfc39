from src.application.training.use_cases.ablation_grid import AblationGrid
from src.application.training.use_cases.decoupling_study import DecouplingStudy
from src.application.training.use_cases.kd_study import KdStudy
from src.application.training.use_cases.run_pipeline import ModelName
from src.application.training.use_cases.run_pipeline import PipelineManifest
from src.application.training.use_cases.run_pipeline import PipelineOutcome
from src.application.training.use_cases.run_pipeline import RunPhase
from src.application.training.use_cases.run_pipeline import RunPipeline
from src.application.training.use_cases.train_phases import TrainPhase1
from src.application.training.use_cases.train_phases import TrainPhase2
from src.application.training.use_cases.train_phases import TrainPhase3

__all__ = [
    "AblationGrid",
    "DecouplingStudy",
    "KdStudy",
    "ModelName",
    "PipelineManifest",
    "PipelineOutcome",
    "RunPhase",
    "RunPipeline",
    "TrainPhase1",
    "TrainPhase2",
    "TrainPhase3",
]
