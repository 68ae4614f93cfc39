from pathlib import Path

from src.application.data.config import SynthSettings
from src.application.data.ports.dataset_repository import DatasetRepository
from src.domain.dataset.synthetic import SynthConfig
from src.domain.dataset.synthetic import SyntheticSplits
from src.domain.dataset.synthetic import generate_synthetic
from src.domain.hierarchy.entities.hierarchy_tree import HierarchyTree
from src.domain.hierarchy.entities.hierarchy_tree import balanced_tree


class GenerateDataset:
    """Use case for writing a seeded synthetic dataset root."""

    def __init__(self, dataset_repository: DatasetRepository) -> None:
        self._dataset_repository = dataset_repository

    def _tree(self, settings: SynthSettings) -> HierarchyTree:
        if settings.hierarchy is not None:
            return self._dataset_repository.load_hierarchy(settings.hierarchy)
        return balanced_tree(settings.k, settings.fanouts)

    def execute(self, settings: SynthSettings, out: Path) -> SyntheticSplits:
        """Generate train/val/test splits and write them with the hierarchy under `out`.

        Raises:
            HierarchyError: If the hierarchy cannot be built or parsed
            InfeasibleConfigError: If the class quotas cannot be met
        """
        tree = self._tree(settings)
        splits = generate_synthetic(
            SynthConfig(
                n=settings.n,
                k=settings.k,
                d=settings.d,
                target_rho=settings.target_rho,
                cooccur_rate=settings.cooccur_rate,
                tree=tree,
                seed=settings.seed,
                noise_sigma=settings.noise_sigma,
                sibling_bias=settings.sibling_bias,
                split_fractions=settings.split_fractions,
            )
        )
        self._dataset_repository.save_root(out, splits, tree)
        return splits
