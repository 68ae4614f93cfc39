from collections.abc import Sequence

import numpy as np

from src.domain.dataset.value_objects.group_assignment import ShotGroup
from src.domain.evaluation.errors import StructureMismatchError
from src.domain.evaluation.eval_report import EvalReport
from src.domain.evaluation.eval_report import EvalSpread

MIN_TRIALS = 2


def _mean_std(values: Sequence[float]) -> tuple[float, float]:
    # Shifted by the first trial so identical trials give back that value and std 0.
    array = np.asarray(values, dtype=np.float64)
    shifted = array - array[0]
    return float(array[0] + shifted.mean()), float(shifted.std(ddof=1))


def _mean_std_optional(values: Sequence[float | None]) -> tuple[float | None, float | None]:
    if any(v is None for v in values):
        return None, None
    return _mean_std([v for v in values if v is not None])


def aggregate_trials(reports: Sequence[EvalReport]) -> EvalReport:
    """Elementwise mean and sample std (ddof=1) across seed reports.

    Raises:
        StructureMismatchError: Fewer than two reports, or reports that
            disagree on classes, groups or skipped classes
    """
    if len(reports) < MIN_TRIALS:
        raise StructureMismatchError(
            f"Aggregation needs at least {MIN_TRIALS} reports, got {len(reports)}."
        )
    first = reports[0]
    for report in reports[1:]:
        if (
            report.class_groups != first.class_groups
            or report.skipped_classes != first.skipped_classes
        ):
            raise StructureMismatchError()

    per_class = [
        _mean_std_optional([r.per_class_ap[j] for r in reports]) for j in range(first.k)
    ]
    groups = {
        group: _mean_std_optional([r.group_map.get(group) for r in reports])
        for group in ShotGroup
    }
    average = _mean_std([r.average for r in reports])
    all_class = _mean_std([r.all_class_map for r in reports])
    splits = {r.split for r in reports}

    return EvalReport(
        split=first.split if len(splits) == 1 else None,
        per_class_ap=tuple(mean for mean, _ in per_class),
        class_groups=first.class_groups,
        group_map={group: mean for group, (mean, _) in groups.items()},
        average=average[0],
        all_class_map=all_class[0],
        skipped_classes=first.skipped_classes,
        std=EvalSpread(
            per_class_ap=tuple(std for _, std in per_class),
            group_map={group: std for group, (_, std) in groups.items()},
            average=average[1],
            all_class_map=all_class[1],
        ),
        trials=tuple(reports),
    )
