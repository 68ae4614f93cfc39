from src.application.evaluation.use_cases.aggregate_reports import AggregateReports
from src.application.evaluation.use_cases.evaluate_checkpoint import EvaluateCheckpoint
from src.application.evaluation.use_cases.evaluate_checkpoint import report_splits
from src.application.evaluation.use_cases.evaluate_checkpoint import train_groups

__all__ = [
    "AggregateReports",
    "EvaluateCheckpoint",
    "report_splits",
    "train_groups",
]
