import argparse

from src.application.data.config import SynthSettings
from src.cli.arguments import add_config
from src.cli.arguments import add_out
from src.cli.arguments import add_seed
from src.cli.arguments import load_config
from src.cli.dependencies import get_generate_dataset_use_case
from src.cli.output import console
from src.domain.dataset.value_objects.dataset_stats import compute_stats

NAME = "gen-data"


def register(subparsers: "argparse._SubParsersAction[argparse.ArgumentParser]") -> None:
    parser = subparsers.add_parser(
        NAME, help="generate a seeded synthetic long-tailed dataset root"
    )
    add_config(parser, help="generator settings (JSON); defaults when omitted")
    add_out(parser)
    add_seed(parser)
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    settings = load_config(args.config, SynthSettings, args.seed)
    splits = get_generate_dataset_use_case().execute(settings, args.out)
    stats = compute_stats(splits.train.labels)
    console.print(
        f"wrote {args.out}: train={splits.train.n} val={splits.val.n} test={splits.test.n} "
        f"k={splits.k} d={splits.d} rho={stats.rho:.2f} lcard={stats.lcard:.4f}"
    )
    return 0
