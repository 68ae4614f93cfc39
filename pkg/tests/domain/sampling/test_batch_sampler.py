import numpy as np
import pytest
from pydantic import ValidationError

from src.domain.sampling.batch_sampler import BatchSampler
from src.domain.sampling.batch_sampler import SamplerKind
from src.domain.sampling.batch_sampler import SamplerSpec
from src.domain.sampling.batch_sampler import draw_batch
from src.domain.sampling.errors import EmptyLabelsError
from src.domain.sampling.errors import ZeroCountClassError

DRAWS = 100_000


def _disjoint_head_tail() -> np.ndarray:
    """Single-label data with 100 head samples then 10 tail samples."""
    labels = np.zeros((110, 2), dtype=np.uint8)
    labels[:100, 0] = 1
    labels[100:, 1] = 1
    return labels


class TestSamplerSpec:
    """Test SamplerSpec validation."""

    def test_batch_size_must_be_positive(self) -> None:
        """Test that b >= 1."""
        with pytest.raises(ValidationError):
            SamplerSpec(kind=SamplerKind.INSTANCE_BALANCED, batch_size=0, seed=0)


class TestDrawBatch:
    """Test draw_batch() and BatchSampler."""

    @pytest.mark.parametrize("kind", list(SamplerKind))
    def test_same_seed_same_batch(self, kind: SamplerKind) -> None:
        """Test that a fixed seed reproduces the batch bit for bit."""
        spec = SamplerSpec(kind=kind, batch_size=64, seed=11)
        labels = _disjoint_head_tail()

        first = draw_batch(spec, labels)
        second = draw_batch(spec, labels)

        assert first.tobytes() == second.tobytes()
        assert first.shape == (64,)
        assert first.min() >= 0
        assert first.max() < labels.shape[0]

    def test_instance_balanced_is_uniform(self) -> None:
        """Test that every sample is drawn with probability 1/n."""
        sampler = BatchSampler(
            SamplerSpec(kind=SamplerKind.INSTANCE_BALANCED, batch_size=1, seed=0),
            np.eye(4, dtype=np.uint8),
        )

        frequency = np.bincount(sampler.draw(DRAWS), minlength=4) / DRAWS

        np.testing.assert_allclose(frequency, 0.25, atol=0.01)

    def test_class_balanced_tail_sample_probability(self) -> None:
        """Test that a tail sample is drawn with probability 0.5 / 10 = 0.05."""
        sampler = BatchSampler(
            SamplerSpec(kind=SamplerKind.CLASS_BALANCED, batch_size=1, seed=1),
            _disjoint_head_tail(),
        )

        frequency = np.bincount(sampler.draw(DRAWS), minlength=110) / DRAWS

        assert frequency[105] == pytest.approx(0.05, abs=0.003)
        assert frequency[100:].sum() == pytest.approx(0.5, abs=0.01)

    def test_class_balanced_co_occurring_sample_sums_routes(self) -> None:
        """Test that a sample in both classes is drawn with probability 0.005 + 0.05."""
        labels = np.zeros((100, 2), dtype=np.uint8)
        labels[:, 0] = 1
        labels[:10, 1] = 1
        sampler = BatchSampler(
            SamplerSpec(kind=SamplerKind.CLASS_BALANCED, batch_size=1, seed=2), labels
        )

        frequency = np.bincount(sampler.draw(DRAWS), minlength=100) / DRAWS

        assert frequency[3] == pytest.approx(0.055, abs=0.003)

    def test_class_balanced_needs_every_class(self) -> None:
        """Test that an empty class cannot be drawn from."""
        with pytest.raises(ZeroCountClassError):
            BatchSampler(
                SamplerSpec(kind=SamplerKind.CLASS_BALANCED, batch_size=4, seed=0),
                np.array([[1, 0], [1, 0]]),
            )

    def test_instance_balanced_tolerates_empty_class(self) -> None:
        """Test that uniform sampling does not look at class counts."""
        sampler = BatchSampler(
            SamplerSpec(kind=SamplerKind.INSTANCE_BALANCED, batch_size=4, seed=0),
            np.array([[1, 0], [1, 0]]),
        )

        assert sampler.draw().shape == (4,)

    def test_empty_labels_raise(self) -> None:
        """Test that there must be something to draw."""
        with pytest.raises(EmptyLabelsError):
            draw_batch(
                SamplerSpec(kind=SamplerKind.INSTANCE_BALANCED, batch_size=1, seed=0),
                np.zeros((0, 2), dtype=np.uint8),
            )

    def test_epoch_yields_batches(self) -> None:
        """Test that an epoch is a sequence of full batches."""
        sampler = BatchSampler(
            SamplerSpec(kind=SamplerKind.CLASS_BALANCED, batch_size=8, seed=0),
            _disjoint_head_tail(),
        )

        batches = list(sampler.epoch(3))

        assert [b.shape for b in batches] == [(8,), (8,), (8,)]
