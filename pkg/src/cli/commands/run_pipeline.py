import argparse

from src.application.training.config import TrainConfig
from src.cli.arguments import add_config
from src.cli.arguments import add_data
from src.cli.arguments import add_out
from src.cli.arguments import add_seed
from src.cli.arguments import load_config
from src.cli.dependencies import get_dataset_repository
from src.cli.dependencies import get_run_pipeline_use_case
from src.cli.output import console
from src.infrastructure.logging import bind_run_context

NAME = "run-pipeline"


def register(subparsers: "argparse._SubParsersAction[argparse.ArgumentParser]") -> None:
    parser = subparsers.add_parser(
        NAME, help="train both teachers and the student, then report val and test mAP"
    )
    add_data(parser)
    add_config(parser, help="training config (JSON); defaults when omitted")
    add_out(parser)
    add_seed(parser)
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    cfg = load_config(args.config, TrainConfig, args.seed)
    data, tree = get_dataset_repository().load_root(args.data)
    with bind_run_context(seed=cfg.seed):
        manifest = get_run_pipeline_use_case().execute(data, tree, cfg, args.out)
    console.print(
        f"phases {list(manifest.phases)} done; final model {manifest.final_model}; "
        f"manifest {args.out / 'pipeline.json'}"
    )
    return 0
