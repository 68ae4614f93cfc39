from pathlib import Path

import orjson

from src.application.training.ports.run_record_repository import RunRecordRepository
from src.application.training.run_record import RunRecord
from src.infrastructure.files.json_codec import write_bytes


class JsonLinesRunRecordRepository(RunRecordRepository):
    """One JSON object per epoch, keys sorted, no wall-clock fields."""

    def save(self, record: RunRecord, path: Path) -> None:
        lines = [
            orjson.dumps(
                {
                    **epoch.model_dump(mode="json"),
                    "config_hash": record.config_hash,
                    "best_epoch": record.best_epoch,
                },
                option=orjson.OPT_SORT_KEYS,
            )
            for epoch in record.epochs
        ]
        write_bytes(path, b"".join(line + b"\n" for line in lines))

    def load(self, path: Path) -> list[dict[str, object]]:
        return [orjson.loads(line) for line in path.read_bytes().splitlines() if line.strip()]
