from pathlib import Path

from src.application.data.ports.dataset_repository import DatasetRepository
from src.application.evaluation.ports.report_repository import CsvCell
from src.application.evaluation.ports.report_repository import ReportRepository
from src.domain.common.seeding import STREAM_EXPOSURE
from src.domain.common.seeding import derive_seed
from src.domain.dataset.entities.multilabel_dataset import MultiLabelDataset
from src.domain.sampling.batch_sampler import SamplerKind
from src.domain.sampling.batch_sampler import SamplerSpec
from src.domain.sampling.exposure import expected_exposure
from src.domain.sampling.exposure import simulate_exposure

EXPOSURE_FILE = "exposure.csv"
EXPOSURE_HEADER = (
    "class_id",
    "count",
    "instance_balanced_rate",
    "class_balanced_rate",
    "instance_balanced_expected",
    "class_balanced_expected",
)
SAMPLERS = (SamplerKind.INSTANCE_BALANCED, SamplerKind.CLASS_BALANCED)


class SimulateSampling:
    """Compare how often each class is seen under both samplers, simulated and analytic."""

    def __init__(
        self,
        dataset_repository: DatasetRepository,
        report_repository: ReportRepository,
    ) -> None:
        self._dataset_repository = dataset_repository
        self._report_repository = report_repository

    def _dataset(self, data: Path) -> MultiLabelDataset:
        if self._dataset_repository.is_split(data):
            return self._dataset_repository.load(data)
        splits, _ = self._dataset_repository.load_root(data)
        return splits.train

    def execute(
        self, data: Path, draws: int, seed: int, batch_size: int, out: Path
    ) -> list[tuple[CsvCell, ...]]:
        """Write `<out>/exposure.csv`, one row per class.

        Raises:
            InvalidDrawsError: If `draws` < 1
            ZeroCountClassError: If a class has no positive sample
        """
        dataset = self._dataset(data)
        simulated = {
            kind: simulate_exposure(
                SamplerSpec(
                    kind=kind,
                    batch_size=batch_size,
                    seed=derive_seed(seed, STREAM_EXPOSURE, index),
                ),
                dataset.labels,
                draws,
            )
            for index, kind in enumerate(SAMPLERS)
        }
        expected = {kind: expected_exposure(kind, dataset.labels) for kind in SAMPLERS}

        rows: list[tuple[CsvCell, ...]] = [
            (
                j,
                int(dataset.class_counts[j]),
                float(simulated[SamplerKind.INSTANCE_BALANCED].rate[j]),
                float(simulated[SamplerKind.CLASS_BALANCED].rate[j]),
                float(expected[SamplerKind.INSTANCE_BALANCED][j]),
                float(expected[SamplerKind.CLASS_BALANCED][j]),
            )
            for j in range(dataset.k)
        ]
        self._report_repository.save_table(EXPOSURE_HEADER, rows, out / EXPOSURE_FILE)
        return rows
