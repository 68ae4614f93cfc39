import argparse

from src.application.training.config import TrainConfig
from src.cli.arguments import add_config
from src.cli.arguments import add_data
from src.cli.arguments import add_out
from src.cli.arguments import add_seed
from src.cli.arguments import load_config
from src.cli.arguments import positive_int
from src.cli.dependencies import get_simulate_sampling_use_case
from src.cli.output import console

NAME = "simulate-sampling"
DEFAULT_DRAWS = 100_000


def register(subparsers: "argparse._SubParsersAction[argparse.ArgumentParser]") -> None:
    parser = subparsers.add_parser(
        NAME, help="per-class exposure under instance- and class-balanced sampling"
    )
    add_data(parser, help="dataset root (train split is used) or single split directory")
    add_config(parser, help="training config (JSON) providing batch_size")
    add_out(parser)
    add_seed(parser)
    parser.add_argument(
        "--draws", type=positive_int, default=DEFAULT_DRAWS, metavar="INT", help="samples to draw"
    )
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    cfg = load_config(args.config, TrainConfig, args.seed)
    rows = get_simulate_sampling_use_case().execute(
        args.data, args.draws, cfg.seed, cfg.batch_size, args.out
    )
    console.print(f"wrote {args.out / 'exposure.csv'} ({len(rows)} classes, {args.draws} draws)")
    return 0
