import argparse

from src.cli.arguments import add_data
from src.cli.arguments import add_out
from src.cli.arguments import add_split
from src.cli.dependencies import get_aggregate_reports_use_case
from src.cli.output import console
from src.cli.output import report_table
from src.domain.dataset.entities.multilabel_dataset import Split

NAME = "report"


def register(subparsers: "argparse._SubParsersAction[argparse.ArgumentParser]") -> None:
    parser = subparsers.add_parser(
        NAME, help="aggregate the final reports of several seed runs (mean ± std)"
    )
    add_data(parser, help="directory holding one run directory per seed")
    add_split(parser)
    add_out(parser)
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    aggregated = get_aggregate_reports_use_case().execute(args.data, Split(args.split), args.out)
    console.print(report_table({f"mean of {len(aggregated.trials)}": aggregated}))
    if aggregated.std is not None:
        console.print(f"average std: {100 * aggregated.std.average:.2f}")
    return 0
