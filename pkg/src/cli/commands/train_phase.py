import argparse

from src.application.training.config import TrainConfig
from src.cli.arguments import add_config
from src.cli.arguments import add_data
from src.cli.arguments import add_out
from src.cli.arguments import add_seed
from src.cli.arguments import load_config
from src.cli.dependencies import get_dataset_repository
from src.cli.dependencies import get_run_phase_use_case
from src.cli.output import console
from src.infrastructure.logging import bind_run_context

NAME = "train-phase"


def register(subparsers: "argparse._SubParsersAction[argparse.ArgumentParser]") -> None:
    parser = subparsers.add_parser(
        NAME, help="train one phase in a run directory (teachers are read from it)"
    )
    add_data(parser)
    add_config(parser, help="training config (JSON); defaults when omitted")
    add_out(parser)
    add_seed(parser)
    parser.add_argument(
        "--phase", type=int, choices=(1, 2, 3), required=True, help="phase to train"
    )
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    cfg = load_config(args.config, TrainConfig, args.seed)
    data, tree = get_dataset_repository().load_root(args.data)
    with bind_run_context(seed=cfg.seed, phase=args.phase):
        result = get_run_phase_use_case().execute(data, tree, cfg, args.phase, args.out)
    console.print(
        f"phase {args.phase}: best epoch {result.record.best_epoch} "
        f"val={result.record.best_val_loss:.6f}"
    )
    return 0
