import csv
import io
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from src.domain.dataset.value_objects.group_assignment import GroupAssignment
from src.domain.dataset.value_objects.group_assignment import ShotGroup
from src.domain.evaluation.errors import StructureMismatchError
from src.domain.evaluation.eval_report import EvalReport

DELTA_CSV_HEADER = ("class_id", "group", "delta_ap", "starts_group")


@dataclass(frozen=True)
class ApDeltaRow:
    class_id: int
    group: ShotGroup
    class_count: int
    delta_ap: float | None
    starts_group: bool


def ap_delta_report(
    report_a: EvalReport, report_b: EvalReport, groups: GroupAssignment
) -> list[ApDeltaRow]:
    """Per-class AP_b − AP_a ordered by descending class count (ties by class id).

    `starts_group` marks the first row of each run of one group. The delta
    is None when either report skipped the class.
    """
    if not report_a.k == report_b.k == groups.k:
        raise StructureMismatchError(
            f"Reports cover {report_a.k} and {report_b.k} classes, groups cover {groups.k}."
        )

    order = np.argsort(-np.asarray(groups.class_counts), kind="stable")
    rows: list[ApDeltaRow] = []
    previous: ShotGroup | None = None
    for class_id in (int(j) for j in order):
        ap_a = report_a.per_class_ap[class_id]
        ap_b = report_b.per_class_ap[class_id]
        group = groups.group_of_class[class_id]
        rows.append(
            ApDeltaRow(
                class_id=class_id,
                group=group,
                class_count=groups.class_counts[class_id],
                delta_ap=None if ap_a is None or ap_b is None else ap_b - ap_a,
                starts_group=group != previous,
            )
        )
        previous = group
    return rows


def ap_delta_csv(rows: Sequence[ApDeltaRow]) -> str:
    """CSV with header class_id,group,delta_ap,starts_group.

    Skipped classes have an empty delta; starts_group is 1 on the first row
    of each group run and 0 elsewhere.
    """
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(DELTA_CSV_HEADER)
    for row in rows:
        writer.writerow(
            (
                row.class_id,
                row.group.value,
                "" if row.delta_ap is None else f"{row.delta_ap:.6f}",
                int(row.starts_group),
            )
        )
    return buffer.getvalue()
