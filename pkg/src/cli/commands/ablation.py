import argparse

from src.application.training.config import AblationSettings
from src.cli.arguments import add_config
from src.cli.arguments import add_data
from src.cli.arguments import add_out
from src.cli.arguments import load_config
from src.cli.dependencies import get_ablation_grid_use_case
from src.cli.dependencies import get_dataset_repository
from src.cli.output import console
from src.cli.output import report_table

NAME = "ablation"


def register(subparsers: "argparse._SubParsersAction[argparse.ArgumentParser]") -> None:
    parser = subparsers.add_parser(
        NAME, help="run the component ablation grid over several seeds"
    )
    add_data(parser)
    add_config(parser, help="ablation settings (JSON); the default grid when omitted")
    add_out(parser)
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    settings = load_config(args.config, AblationSettings)
    data, tree = get_dataset_repository().load_root(args.data)
    results = get_ablation_grid_use_case().execute(data, tree, settings, args.out)
    console.print(report_table(results))
    return 0
