import numpy as np
import pytest

from src.application.training.config import TrainConfig
from src.domain.dataset.synthetic import SynthConfig
from src.domain.dataset.synthetic import SyntheticSplits
from src.domain.dataset.synthetic import generate_synthetic
from src.domain.hierarchy.entities.hierarchy_tree import HierarchyNode
from src.domain.hierarchy.entities.hierarchy_tree import HierarchyTree
from src.domain.hierarchy.entities.hierarchy_tree import balanced_tree


@pytest.fixture
def two_leaf_tree() -> HierarchyTree:
    """Two leaves (0, 1) under a single parent (2)."""
    return HierarchyTree(
        2,
        [
            HierarchyNode(id=0, name="a", level=1, parents=frozenset({2})),
            HierarchyNode(id=1, name="b", level=1, parents=frozenset({2})),
            HierarchyNode(id=2, name="ab", level=2),
        ],
    )


@pytest.fixture
def eight_leaf_tree() -> HierarchyTree:
    """Three levels: leaves 0..7, mid nodes 8..11, top nodes 12 and 13.

    Leaf i hangs under mid node 8 + i % 4, mid node 8 + j under top node 12 + j % 2.
    """
    return balanced_tree(8, (2, 2))


@pytest.fixture
def diamond_tree() -> HierarchyTree:
    """Leaf 1 has two parents (3 and 4), both under the top node 5."""
    return HierarchyTree(
        3,
        [
            HierarchyNode(id=0, name="a", level=1, parents=frozenset({3})),
            HierarchyNode(id=1, name="b", level=1, parents=frozenset({3, 4})),
            HierarchyNode(id=2, name="c", level=1, parents=frozenset({4})),
            HierarchyNode(id=3, name="ab", level=2, parents=frozenset({5})),
            HierarchyNode(id=4, name="bc", level=2, parents=frozenset({5})),
            HierarchyNode(id=5, name="root", level=3),
        ],
    )


@pytest.fixture
def small_tree() -> HierarchyTree:
    """Six leaves dealt round-robin under three parents."""
    return balanced_tree(6, (2,))


@pytest.fixture
def small_synth_config(small_tree: HierarchyTree) -> SynthConfig:
    return SynthConfig(
        n=240,
        k=6,
        d=5,
        target_rho=8.0,
        cooccur_rate=0.2,
        tree=small_tree,
        seed=7,
        noise_sigma=0.5,
    )


@pytest.fixture
def small_splits(small_synth_config: SynthConfig) -> SyntheticSplits:
    return generate_synthetic(small_synth_config)


@pytest.fixture
def quick_config() -> TrainConfig:
    """A training configuration small enough to run every phase in well under a second."""
    return TrainConfig(
        epochs=2,
        batch_size=32,
        hidden_dims=(8,),
        embedding_dim=4,
        lr_initial=1e-2,
        group_thresholds=(40, 10),
    )


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(1234)
