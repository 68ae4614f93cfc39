from collections.abc import Mapping

from rich.console import Console
from rich.table import Table

from src.domain.dataset.value_objects.group_assignment import ShotGroup
from src.domain.evaluation.eval_report import EvalReport

console = Console(highlight=False, soft_wrap=True)


def _percent(value: float | None) -> str:
    return "-" if value is None else f"{100 * value:.2f}"


def report_table(reports: Mapping[str, EvalReport]) -> Table:
    """mAP (in %) per shot group, their average and the all-class mAP, one row per report."""
    table = Table(*("report", *(g.value for g in ShotGroup), "average", "all"))
    for name, report in reports.items():
        table.add_row(
            name,
            *(_percent(report.group_map.get(g)) for g in ShotGroup),
            _percent(report.average),
            _percent(report.all_class_map),
        )
    return table
