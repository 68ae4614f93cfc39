from pathlib import Path
from typing import Any

import orjson
from pydantic import BaseModel

JSON_OPTIONS = orjson.OPT_SORT_KEYS | orjson.OPT_INDENT_2 | orjson.OPT_APPEND_NEWLINE


def dump_json(document: BaseModel | dict[str, Any]) -> bytes:
    """Byte-stable JSON: sorted keys, 2-space indent, trailing newline."""
    payload = document.model_dump(mode="json") if isinstance(document, BaseModel) else document
    return orjson.dumps(payload, option=JSON_OPTIONS)


def write_bytes(path: Path, content: bytes) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_bytes(content)


def write_json(path: Path, document: BaseModel | dict[str, Any]) -> None:
    write_bytes(path, dump_json(document))
