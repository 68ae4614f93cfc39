import argparse
from collections.abc import Sequence
from typing import NoReturn

from src.cli.commands import COMMANDS
from src.cli.error_management import EXIT_OK
from src.cli.error_management import UsageError
from src.cli.error_management import handle_exception
from src.infrastructure.logging import bind_run_context

PROG = "python -m src.cli"


class CliArgumentParser(argparse.ArgumentParser):
    """Parser whose errors raise instead of exiting, so they share the exit-code mapping."""

    def error(self, message: str) -> NoReturn:
        raise UsageError(f"{self.prog}: {message}")


class HelpFormatter(argparse.ArgumentDefaultsHelpFormatter):
    pass


def build_parser() -> CliArgumentParser:
    parser = CliArgumentParser(
        prog=PROG,
        description="Hierarchy-aware long-tailed multi-label training and evaluation.",
        formatter_class=HelpFormatter,
    )
    subparsers = parser.add_subparsers(
        title="commands", dest="command", required=True, metavar="COMMAND"
    )
    for command in COMMANDS:
        command.register(subparsers)
    for subparser in subparsers.choices.values():
        subparser.formatter_class = HelpFormatter
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    """Run one command; returns 0 on success, 1 on usage errors, 2 on runtime errors."""
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exit_request:  # --help
        return int(exit_request.code or EXIT_OK)
    except Exception as exception:
        return handle_exception(exception)

    try:
        with bind_run_context(command=args.command):
            return args.handler(args)
    except Exception as exception:
        return handle_exception(exception)
