import argparse
from pathlib import Path

from src.application.evaluation.use_cases.evaluate_checkpoint import REPORTED_SPLITS
from src.application.training.config import TrainConfig
from src.cli.arguments import add_config
from src.cli.arguments import add_data
from src.cli.arguments import add_out
from src.cli.arguments import add_split
from src.cli.arguments import load_config
from src.cli.dependencies import get_evaluate_checkpoint_use_case
from src.cli.output import console
from src.cli.output import report_table
from src.domain.dataset.entities.multilabel_dataset import Split

NAME = "evaluate"


def register(subparsers: "argparse._SubParsersAction[argparse.ArgumentParser]") -> None:
    parser = subparsers.add_parser(NAME, help="score a checkpoint with per-group mAP")
    parser.add_argument(
        "--checkpoint", type=Path, required=True, metavar="FILE", help="checkpoint directory"
    )
    add_data(parser)
    add_config(parser, help="training config (JSON) providing group_thresholds")
    add_split(parser, default=None)
    add_out(parser, required=False)
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    thresholds = load_config(args.config, TrainConfig).group_thresholds
    splits = REPORTED_SPLITS if args.split is None else (Split(args.split),)
    reports = get_evaluate_checkpoint_use_case().execute(
        args.checkpoint, args.data, thresholds, splits, args.out
    )
    console.print(report_table({str(split): report for split, report in reports.items()}))
    return 0
