import argparse

from rich.table import Table

from src.application.training.config import TrainConfig
from src.cli.arguments import add_config
from src.cli.arguments import add_data
from src.cli.arguments import load_config
from src.cli.dependencies import get_describe_dataset_use_case
from src.cli.output import console

NAME = "stats"


def register(subparsers: "argparse._SubParsersAction[argparse.ArgumentParser]") -> None:
    parser = subparsers.add_parser(
        NAME, help="print imbalance ratio, label cardinality, class counts and shot groups"
    )
    add_data(parser, help="dataset root or single split directory")
    add_config(parser, help="training config (JSON) providing group_thresholds")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    thresholds = load_config(args.config, TrainConfig).group_thresholds
    description = get_describe_dataset_use_case().execute(args.data, thresholds)

    for split, stats in description.stats.items():
        console.print(
            f"{split}: n={description.sizes[split]} rho={stats.rho:.6g} lcard={stats.lcard:.6g}"
        )

    table = Table("class", "count", "group")
    groups = description.groups
    for class_id in next(iter(description.stats.values())).sorted_class_order:
        table.add_row(
            str(class_id),
            str(groups.class_counts[class_id]),
            groups.group_of_class[class_id].value,
        )
    console.print(table)
    return 0
