from pathlib import Path

import orjson
import pytest
from pydantic import BaseModel

from src.application.training.run_record import EpochRecord
from src.application.training.run_record import RunRecord
from src.domain.dataset.value_objects.group_assignment import assign_groups
from src.domain.evaluation.aggregate import aggregate_trials
from src.domain.evaluation.eval_report import EvalReport
from src.domain.evaluation.eval_report import build_report
from src.infrastructure.files.repositories.report_repository import FileReportRepository
from src.infrastructure.files.repositories.report_repository import format_cell
from src.infrastructure.files.repositories.run_record_repository import (
    JsonLinesRunRecordRepository,
)


def _report(shift: float) -> EvalReport:
    groups = assign_groups([200, 50, 5], (100, 10))
    scores = [[0.9, 0.1 + shift, 0.3], [0.2, 0.8, 0.6], [0.4, 0.5, 0.2]]
    labels = [[1, 0, 0], [0, 1, 1], [1, 1, 0]]
    return build_report(scores, labels, groups, split="test")


def _record(wall_time: float) -> RunRecord:
    record = RunRecord(phase=2, config_hash="abc123", best_epoch=1, wall_time_s=wall_time)
    record.epochs.extend(
        EpochRecord(
            phase=2, epoch=e, train_loss=0.5 / e, val_loss=0.4 + e / 10, lr=1e-3, best_val_loss=0.5, improved=e == 1
        )
        for e in (1, 2)
    )
    return record


class TestFileReportRepository:
    """Test FileReportRepository."""

    def test_report_round_trip(self, tmp_path: Path) -> None:
        """Test that a report reads back equal, including its spread and trials."""
        repository = FileReportRepository()
        report = aggregate_trials([_report(0.0), _report(0.85)])

        repository.save_report(report, tmp_path / "reports" / "final_test.json")

        assert repository.load_report(tmp_path / "reports" / "final_test.json") == report

    def test_find_reports_sorted(self, tmp_path: Path) -> None:
        """Test the glob over seed run directories."""
        repository = FileReportRepository()
        for seed in (2, 0, 1):
            repository.save_report(_report(0.0), tmp_path / f"seed{seed}" / "reports" / "final_val.json")
        repository.save_report(_report(0.0), tmp_path / "seed0" / "reports" / "teacher1_val.json")

        found = repository.find_reports(tmp_path, "*/reports/final_val.json")

        assert [p.parent.parent.name for p in found] == ["seed0", "seed1", "seed2"]

    def test_table_cells(self, tmp_path: Path) -> None:
        """Test CSV formatting of every cell kind."""
        FileReportRepository().save_table(
            ("name", "on", "n", "value", "std"), [("none", True, 3, 0.5, None)], tmp_path / "t.csv"
        )

        assert (tmp_path / "t.csv").read_text() == "name,on,n,value,std\nnone,1,3,0.500000,\n"

    @pytest.mark.parametrize(
        ("cell", "text"),
        [(None, ""), (False, "0"), (1 / 3, "0.333333"), (7, "7"), ("few", "few")],
    )
    def test_format_cell(self, cell: str | int | float | None, text: str) -> None:
        """Test single cell formatting."""
        assert format_cell(cell) == text

    def test_document_is_sorted_json(self, tmp_path: Path) -> None:
        """Test that documents are written with sorted keys and a trailing newline."""

        class Manifest(BaseModel):
            zeta: int
            alpha: str

        FileReportRepository().save_document(Manifest(zeta=1, alpha="a"), tmp_path / "m.json")

        content = (tmp_path / "m.json").read_bytes()
        assert content == b'{\n  "alpha": "a",\n  "zeta": 1\n}\n'


class TestJsonLinesRunRecordRepository:
    """Test JsonLinesRunRecordRepository."""

    def test_one_line_per_epoch(self, tmp_path: Path) -> None:
        """Test the record lines and their shared fields."""
        repository = JsonLinesRunRecordRepository()

        repository.save(_record(1.5), tmp_path / "records" / "phase2.jsonl")

        lines = repository.load(tmp_path / "records" / "phase2.jsonl")
        assert [line["epoch"] for line in lines] == [1, 2]
        assert all(line["config_hash"] == "abc123" for line in lines)
        assert all("wall_time_s" not in line for line in lines)

    def test_bytes_ignore_wall_time(self, tmp_path: Path) -> None:
        """Test that records differing only in duration are byte-identical."""
        repository = JsonLinesRunRecordRepository()

        repository.save(_record(1.5), tmp_path / "a.jsonl")
        repository.save(_record(99.0), tmp_path / "b.jsonl")

        assert (tmp_path / "a.jsonl").read_bytes() == (tmp_path / "b.jsonl").read_bytes()

    def test_keys_are_sorted(self, tmp_path: Path) -> None:
        """Test that each line lists its keys in order."""
        repository = JsonLinesRunRecordRepository()
        repository.save(_record(0.0), tmp_path / "r.jsonl")

        first = (tmp_path / "r.jsonl").read_bytes().splitlines()[0]

        keys = list(orjson.loads(first))
        assert keys == sorted(keys)
