"""Seeded long-tailed multi-label benchmark with hierarchical feature structure."""

from dataclasses import dataclass

import numpy as np
from pydantic import BaseModel
from pydantic import ConfigDict
from pydantic import Field
from pydantic import model_validator

from src.domain.common.arrays import FloatArray
from src.domain.common.arrays import IndexArray
from src.domain.common.seeding import STREAM_PROTOTYPES
from src.domain.common.seeding import STREAM_SPLITS
from src.domain.common.seeding import derive_generator
from src.domain.dataset.entities.multilabel_dataset import DatasetSplits
from src.domain.dataset.entities.multilabel_dataset import MultiLabelDataset
from src.domain.dataset.entities.multilabel_dataset import Split
from src.domain.dataset.errors import InfeasibleConfigError
from src.domain.hierarchy.entities.hierarchy_tree import HierarchyTree

SPLIT_ORDER = (Split.TRAIN, Split.VAL, Split.TEST)


class SynthConfig(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid", arbitrary_types_allowed=True)

    n: int = Field(..., ge=1)
    k: int = Field(..., ge=2)
    d: int = Field(..., ge=1)
    target_rho: float = Field(..., ge=1.0)
    cooccur_rate: float = Field(..., ge=0.0, lt=1.0)
    tree: HierarchyTree
    seed: int = Field(..., ge=0, lt=2**64)
    noise_sigma: float = Field(..., gt=0.0)
    parent_scale: float = Field(3.0, gt=0.0)
    child_scale: float = Field(1.0, gt=0.0)
    sibling_bias: float = Field(0.75, ge=0.0, le=1.0)
    split_fractions: tuple[float, float, float] = (0.6, 0.2, 0.2)

    @model_validator(mode="after")
    def _check_consistency(self) -> "SynthConfig":
        if self.k != self.tree.leaf_count:
            raise ValueError(
                f"k={self.k} does not match the hierarchy leaf count {self.tree.leaf_count}"
            )
        if min(self.split_fractions) <= 0 or not np.isclose(sum(self.split_fractions), 1.0):
            raise ValueError("split_fractions must be positive and sum to 1")
        return self


@dataclass(frozen=True, eq=False)
class SyntheticSplits(DatasetSplits):
    """Generated splits plus the frozen class prototypes behind their features."""

    prototypes: FloatArray
    parent_prototypes: FloatArray


def apportion(
    total: int,
    weights: FloatArray,
    lower: IndexArray | int = 0,
    upper: IndexArray | int | None = None,
) -> IndexArray:
    """Integer allocation of `total` proportional to `weights` within [lower, upper].

    Largest-remainder rounding; ties resolved towards the lower index.
    """
    size = weights.shape[0]
    low = np.broadcast_to(np.asarray(lower, dtype=np.int64), (size,))
    high = np.broadcast_to(
        np.asarray(total if upper is None else upper, dtype=np.int64), (size,)
    )
    if low.sum() > total or high.sum() < total or (low > high).any():
        raise InfeasibleConfigError(
            f"Cannot split {total} units across {size} classes within the required bounds."
        )

    quotas = total * weights / weights.sum()
    alloc = np.clip(np.floor(quotas).astype(np.int64), low, high)
    while (remaining := total - int(alloc.sum())) != 0:
        gap = quotas - alloc
        if remaining > 0:
            candidates = np.where(alloc < high, gap, -np.inf)
            alloc[int(np.argmax(candidates))] += 1
        else:
            candidates = np.where(alloc > low, gap, np.inf)
            alloc[int(np.argmin(candidates))] -= 1
    return alloc


def _split_sizes(n: int, fractions: tuple[float, float, float], k: int) -> IndexArray:
    sizes = apportion(n, np.asarray(fractions, dtype=np.float64))
    if (sizes < k).any():
        raise InfeasibleConfigError(
            f"Every split needs at least k={k} samples; n={n} gives split sizes {sizes.tolist()}."
        )
    return sizes


def _prototypes(cfg: SynthConfig) -> tuple[FloatArray, FloatArray]:
    rng = derive_generator(cfg.seed, STREAM_PROTOTYPES)
    tree = cfg.tree
    if tree.levels >= 2:  # noqa: PLR2004
        parent_ids = tree.level_node_ids(2)
        parent_of = [
            [parent_ids.index(p) for p in sorted(tree.nodes[leaf].parents)]
            for leaf in range(cfg.k)
        ]
    else:
        parent_ids = tuple(range(cfg.k))
        parent_of = [[leaf] for leaf in range(cfg.k)]

    parent_prototypes = rng.normal(size=(len(parent_ids), cfg.d)) * cfg.parent_scale
    offsets = rng.normal(size=(cfg.k, cfg.d)) * cfg.child_scale
    prototypes = np.stack(
        [parent_prototypes[parents].mean(axis=0) for parents in parent_of]
    ) + offsets
    return prototypes, parent_prototypes


def _pick_hosts(
    rng: np.random.Generator,
    available: np.ndarray,
    sibling_hosts: np.ndarray,
    count: int,
    sibling_bias: float,
) -> IndexArray:
    candidates = np.flatnonzero(available)
    is_sibling = sibling_hosts[candidates]
    n_sibling = int(is_sibling.sum())
    n_other = candidates.size - n_sibling

    if n_sibling and n_other:
        p = np.where(is_sibling, sibling_bias / n_sibling, (1.0 - sibling_bias) / n_other)
    else:
        p = np.full(candidates.size, 1.0 / candidates.size)
    if np.count_nonzero(p) < count:
        p = np.full(candidates.size, 1.0 / candidates.size)
    return rng.choice(candidates, size=count, replace=False, p=p / p.sum())


def _generate_split(
    cfg: SynthConfig,
    split: Split,
    n_split: int,
    prototypes: FloatArray,
    siblings: list[frozenset[int]],
) -> MultiLabelDataset:
    rng = derive_generator(cfg.seed, STREAM_SPLITS, SPLIT_ORDER.index(split))
    k = cfg.k

    decay = np.power(cfg.target_rho, -np.arange(k) / (k - 1))
    extras_total = round(cfg.cooccur_rate * n_split)
    label_total = n_split + extras_total
    class_totals = apportion(label_total, decay, lower=1, upper=n_split)
    extras = apportion(extras_total, class_totals.astype(np.float64), upper=class_totals - 1)
    primaries = class_totals - extras

    primary = rng.permutation(np.repeat(np.arange(k), primaries))
    labels = np.zeros((n_split, k), dtype=np.uint8)
    labels[np.arange(n_split), primary] = 1

    has_extra = np.zeros(n_split, dtype=bool)
    for j in np.argsort(-extras, kind="stable"):
        count = int(extras[j])
        if count == 0:
            break
        available = ~has_extra & (primary != j)
        if int(available.sum()) < count:
            raise InfeasibleConfigError(
                f"Not enough host samples for {count} co-occurring labels of class {j} in {split}."
            )
        sibling_hosts = np.isin(primary, sorted(siblings[j]))
        hosts = _pick_hosts(rng, available, sibling_hosts, count, cfg.sibling_bias)
        has_extra[hosts] = True
        labels[hosts, j] = 1

    noise = rng.normal(size=(n_split, cfg.d)) * cfg.noise_sigma
    features = (prototypes[primary] + noise).astype(np.float32)
    return MultiLabelDataset(features=features, labels=labels, split=split, seed=cfg.seed)


def generate_synthetic(cfg: SynthConfig) -> SyntheticSplits:
    """Generate disjoint train / val / test splits.

    Per split, class label counts follow a geometric decay with ratio
    `target_rho` between the first and last class (up to rounding), every
    class is the primary label of at least one sample, a `cooccur_rate`
    share of samples carries one extra label (biased towards classes that
    share a level-2 parent with the primary class), and features are the
    primary class prototype (parent prototype + child offset) plus
    isotropic Gaussian noise.

    Raises:
        InfeasibleConfigError: If a split cannot hold every class or the
            co-occurring labels cannot be placed
    """
    sizes = _split_sizes(cfg.n, cfg.split_fractions, cfg.k)
    prototypes, parent_prototypes = _prototypes(cfg)
    siblings = cfg.tree.siblings_by_leaf()
    splits = [
        _generate_split(cfg, split, int(size), prototypes, siblings)
        for split, size in zip(SPLIT_ORDER, sizes, strict=True)
    ]
    return SyntheticSplits(
        train=splits[0],
        val=splits[1],
        test=splits[2],
        prototypes=prototypes,
        parent_prototypes=parent_prototypes,
    )
