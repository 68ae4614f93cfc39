from src.domain.evaluation.aggregate import aggregate_trials
from src.domain.evaluation.ap_delta import ApDeltaRow
from src.domain.evaluation.ap_delta import ap_delta_csv
from src.domain.evaluation.ap_delta import ap_delta_report
from src.domain.evaluation.average_precision import average_precision
from src.domain.evaluation.errors import EvaluationError
from src.domain.evaluation.errors import EvaluationErrorCode
from src.domain.evaluation.eval_report import EvalReport
from src.domain.evaluation.eval_report import EvalSpread
from src.domain.evaluation.eval_report import build_report
from src.domain.evaluation.eval_report import evaluate

__all__ = [
    "ApDeltaRow",
    "EvalReport",
    "EvalSpread",
    "EvaluationError",
    "EvaluationErrorCode",
    "aggregate_trials",
    "ap_delta_csv",
    "ap_delta_report",
    "average_precision",
    "build_report",
    "evaluate",
]
