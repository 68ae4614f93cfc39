"""Shared flags and config-file loading for the commands."""

import argparse
from pathlib import Path

from pydantic import BaseModel

from src.cli.error_management.usage_error import UsageError
from src.domain.dataset.entities.multilabel_dataset import Split


def non_negative_int(value: str) -> int:
    try:
        parsed = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {value!r}") from None
    if parsed < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {parsed}")
    return parsed


def positive_int(value: str) -> int:
    parsed = non_negative_int(value)
    if parsed == 0:
        raise argparse.ArgumentTypeError("expected a positive integer, got 0")
    return parsed


def add_data(parser: argparse.ArgumentParser, help: str = "dataset root directory") -> None:  # noqa: A002
    parser.add_argument("--data", type=Path, required=True, metavar="DIR", help=help)


def add_out(parser: argparse.ArgumentParser, required: bool = True) -> None:
    parser.add_argument(
        "--out", type=Path, required=required, metavar="DIR", help="output directory"
    )


def add_config(parser: argparse.ArgumentParser, help: str, required: bool = False) -> None:  # noqa: A002
    parser.add_argument("--config", type=Path, required=required, metavar="FILE", help=help)


def add_seed(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--seed",
        type=non_negative_int,
        default=None,
        metavar="INT",
        help="run seed (overrides the config file seed)",
    )


def add_split(parser: argparse.ArgumentParser, default: str | None = Split.TEST.value) -> None:
    parser.add_argument(
        "--split",
        choices=[Split.VAL.value, Split.TEST.value],
        default=default,
        help="evaluation split",
    )


def load_config[ConfigT: BaseModel](
    path: Path | None, model: type[ConfigT], seed: int | None = None
) -> ConfigT:
    """Validate a JSON config file (defaults when no file is given), then apply `--seed`."""
    if path is None:
        config = model()
    else:
        try:
            content = path.read_bytes()
        except OSError as error:
            raise UsageError(f"Cannot read config file {path}: {error.strerror}.") from error
        config = model.model_validate_json(content)
    if seed is not None:
        config = model.model_validate({**config.model_dump(), "seed": seed})
    return config
