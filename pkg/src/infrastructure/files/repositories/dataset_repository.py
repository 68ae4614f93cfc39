import csv
import io
from pathlib import Path

import numpy as np
from pydantic import BaseModel
from pydantic import ConfigDict
from pydantic import Field
from pydantic import ValidationError

from src.application.data.ports.dataset_repository import DatasetRepository
from src.domain.dataset.entities.multilabel_dataset import DatasetSplits
from src.domain.dataset.entities.multilabel_dataset import MultiLabelDataset
from src.domain.dataset.entities.multilabel_dataset import Split
from src.domain.dataset.errors import InvalidDatasetError
from src.domain.dataset.errors import ShapeMismatchError
from src.domain.dataset.errors import TruncatedDatasetError
from src.domain.hierarchy.entities.hierarchy_tree import HierarchyTree
from src.domain.hierarchy.entities.hierarchy_tree import parse_hierarchy
from src.domain.hierarchy.entities.hierarchy_tree import to_json
from src.infrastructure.files.json_codec import write_bytes
from src.infrastructure.files.json_codec import write_json

MANIFEST_FILE = "manifest.json"
FEATURES_FILE = "features.bin"
LABELS_FILE = "labels.csv"
HIERARCHY_FILE = "hierarchy.json"
FEATURE_DTYPE = np.dtype("<f4")


class DatasetManifest(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    n: int = Field(..., ge=1)
    k: int = Field(..., ge=1)
    d: int = Field(..., ge=1)
    split: Split
    seed: int | None = None


class DatasetFileMapper:
    """Converts between split directories and MultiLabelDataset entities."""

    @staticmethod
    def bytes_to_manifest(content: bytes) -> DatasetManifest:
        if not content.strip():
            raise TruncatedDatasetError(f"{MANIFEST_FILE} is empty.")
        try:
            return DatasetManifest.model_validate_json(content)
        except ValidationError as error:
            raise InvalidDatasetError(
                f"{MANIFEST_FILE} is malformed ({error.error_count()} errors)."
            ) from error

    @staticmethod
    def labels_to_csv(labels: np.ndarray) -> bytes:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerows(labels.tolist())
        return buffer.getvalue().encode()

    @staticmethod
    def csv_to_labels(content: bytes, manifest: DatasetManifest) -> np.ndarray:
        rows = [row for row in csv.reader(io.StringIO(content.decode())) if row]
        if not rows:
            raise TruncatedDatasetError(f"{LABELS_FILE} is empty.")
        if len(rows) < manifest.n:
            raise TruncatedDatasetError(
                f"{LABELS_FILE} has {len(rows)} rows, manifest declares {manifest.n}."
            )
        widths = {len(row) for row in rows}
        if len(rows) != manifest.n or widths != {manifest.k}:
            raise ShapeMismatchError(
                f"{LABELS_FILE} is {len(rows)}×{sorted(widths)}, "
                f"manifest declares {manifest.n}×{manifest.k}."
            )
        try:
            return np.asarray(rows, dtype=np.int64)
        except ValueError as error:
            raise InvalidDatasetError(f"{LABELS_FILE} holds non-integer cells.") from error

    @staticmethod
    def bytes_to_features(content: bytes, manifest: DatasetManifest) -> np.ndarray:
        expected = manifest.n * manifest.d * FEATURE_DTYPE.itemsize
        if not content:
            raise TruncatedDatasetError(f"{FEATURES_FILE} is empty.")
        if len(content) < expected:
            raise TruncatedDatasetError(
                f"{FEATURES_FILE} holds {len(content)} bytes, expected {expected}."
            )
        if len(content) != expected:
            raise ShapeMismatchError(
                f"{FEATURES_FILE} holds {len(content)} bytes, expected {expected}."
            )
        return np.frombuffer(content, dtype=FEATURE_DTYPE).reshape(manifest.n, manifest.d)


class FileDatasetRepository(DatasetRepository, DatasetFileMapper):
    """Dataset roots on the local filesystem.

    A split directory holds `manifest.json`, `features.bin` (little-endian
    float32, row-major) and `labels.csv` (0/1, no header). Class counts
    are always recomputed from the labels.
    """

    def save(self, dataset: MultiLabelDataset, directory: Path) -> None:
        manifest = DatasetManifest(
            n=dataset.n, k=dataset.k, d=dataset.d, split=dataset.split, seed=dataset.seed
        )
        write_json(directory / MANIFEST_FILE, manifest)
        write_bytes(directory / FEATURES_FILE, dataset.features.astype(FEATURE_DTYPE).tobytes())
        write_bytes(directory / LABELS_FILE, self.labels_to_csv(dataset.labels))

    def load(self, directory: Path) -> MultiLabelDataset:
        manifest = self.bytes_to_manifest((directory / MANIFEST_FILE).read_bytes())
        features = self.bytes_to_features((directory / FEATURES_FILE).read_bytes(), manifest)
        labels = self.csv_to_labels((directory / LABELS_FILE).read_bytes(), manifest)
        return MultiLabelDataset(
            features=features, labels=labels, split=manifest.split, seed=manifest.seed
        )

    def is_split(self, directory: Path) -> bool:
        return (directory / MANIFEST_FILE).is_file()

    def save_hierarchy(self, tree: HierarchyTree, path: Path) -> None:
        write_bytes(path, (to_json(tree) + "\n").encode())

    def load_hierarchy(self, path: Path) -> HierarchyTree:
        return parse_hierarchy(path.read_bytes())

    def save_root(self, root: Path, splits: DatasetSplits, tree: HierarchyTree) -> None:
        self.save_hierarchy(tree, root / HIERARCHY_FILE)
        for split, dataset in splits.by_split().items():
            self.save(dataset, root / split)

    def load_root(self, root: Path) -> tuple[DatasetSplits, HierarchyTree]:
        tree = self.load_hierarchy(root / HIERARCHY_FILE)
        loaded = {split: self.load(root / split) for split in Split}
        splits = DatasetSplits(
            train=loaded[Split.TRAIN], val=loaded[Split.VAL], test=loaded[Split.TEST]
        )
        return splits, tree
