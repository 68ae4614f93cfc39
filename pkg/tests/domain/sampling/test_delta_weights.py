import numpy as np
import pytest

from src.domain.sampling.delta_weights import DeltaTransform
from src.domain.sampling.delta_weights import DeltaWeights
from src.domain.sampling.delta_weights import compute_delta
from src.domain.sampling.errors import AllNegativeRowError
from src.domain.sampling.errors import ZeroCountClassError


@pytest.fixture
def head_tail_labels() -> np.ndarray:
    """Counts [100, 10]; the ten class-1 samples also carry class 0."""
    labels = np.zeros((100, 2), dtype=np.uint8)
    labels[:, 0] = 1
    labels[:10, 1] = 1
    return labels


def _delta_by_definition(labels: np.ndarray) -> np.ndarray:
    n, k = labels.shape
    counts = [int(labels[:, j].sum()) for j in range(k)]
    delta = np.empty((n, k))
    for i in range(n):
        p_instance = sum((1.0 / k) / counts[j] for j in range(k) if labels[i, j])
        for j in range(k):
            ratio = ((1.0 / k) / counts[j]) / p_instance
            delta[i, j] = ratio if labels[i, j] else min(ratio, 1.0)
    return delta


class TestComputeDelta:
    """Test compute_delta()."""

    def test_single_positive_label_gives_one(self) -> None:
        """Test that a sample with one label has δ = √δ = 1 for it."""
        weights = compute_delta(np.eye(3, dtype=np.uint8))

        np.testing.assert_array_equal(np.diag(weights.delta), [1.0, 1.0, 1.0])
        np.testing.assert_array_equal(np.diag(weights.sqrt_delta), [1.0, 1.0, 1.0])

    def test_head_tail_co_occurrence(self, head_tail_labels: np.ndarray) -> None:
        """Test δ = 1/11 for the head label of a sample that also carries the tail label."""
        weights = compute_delta(head_tail_labels)

        assert weights.delta[0, 0] == pytest.approx(1 / 11, rel=1e-14)
        assert weights.delta[0, 1] == pytest.approx(10 / 11, rel=1e-14)
        assert weights.sqrt_delta[0, 0] == pytest.approx(0.301511, abs=1e-6)

    def test_equal_counts_all_positive(self) -> None:
        """Test that a sample positive in all k balanced classes gets 1/k everywhere."""
        labels = np.ones((4, 4), dtype=np.uint8)

        np.testing.assert_allclose(compute_delta(labels).delta, 0.25, rtol=1e-14)

    def test_matches_definition_on_random_labels(self, rng: np.random.Generator) -> None:
        """Test the vectorized factors against a term-by-term evaluation."""
        for _ in range(20):
            n, k = int(rng.integers(2, 201)), int(rng.integers(2, 17))
            labels = (rng.random((n, k)) < 0.3).astype(np.uint8)  # noqa: PLR2004
            labels[np.arange(n), rng.integers(0, k, size=n)] = 1
            labels[rng.integers(0, n, size=k), np.arange(k)] = 1

            np.testing.assert_allclose(
                compute_delta(labels).delta, _delta_by_definition(labels), rtol=1e-14
            )

    def test_factors_in_unit_interval(self, rng: np.random.Generator) -> None:
        """Test 0 < δ <= 1 and √δ >= δ."""
        labels = (rng.random((50, 6)) < 0.4).astype(np.uint8)  # noqa: PLR2004
        labels[np.arange(50), rng.integers(0, 6, size=50)] = 1
        labels[:6] |= np.eye(6, dtype=np.uint8)

        weights = compute_delta(labels)

        assert (weights.delta > 0).all()
        assert (weights.delta <= 1).all()
        assert (weights.sqrt_delta >= weights.delta).all()

    def test_positive_entry_is_one_only_for_single_label_samples(self, rng: np.random.Generator) -> None:
        """Test that a positive factor equals 1 exactly when it is the sample's only label."""
        labels = (rng.random((120, 8)) < 0.25).astype(np.uint8)  # noqa: PLR2004
        labels[np.arange(120), rng.integers(0, 8, size=120)] = 1
        labels[:8] |= np.eye(8, dtype=np.uint8)

        delta = compute_delta(labels).delta

        positive = labels.astype(bool)
        single = np.broadcast_to((labels.sum(axis=1) == 1)[:, None], labels.shape)
        np.testing.assert_array_equal(delta[positive] == 1.0, single[positive])

    def test_negative_entries_are_capped_at_one(self, head_tail_labels: np.ndarray) -> None:
        """Test that a head-only sample gets the capped factor 1 on the tail class it lacks."""
        weights = compute_delta(head_tail_labels)

        assert weights.delta[50, 0] == 1.0
        assert weights.delta[50, 1] == 1.0

    def test_reference_class_counts(self) -> None:
        """Test that given class counts replace the ones counted on the labels."""
        weights = compute_delta(np.array([[1, 1], [1, 0]]), class_counts=[10, 1])

        assert weights.delta[0, 0] == pytest.approx(1 / 11, rel=1e-14)
        assert weights.delta[0, 1] == pytest.approx(10 / 11, rel=1e-14)
        assert weights.delta[1, 0] == 1.0

    def test_reference_counts_allow_absent_class(self) -> None:
        """Test that a class missing from the labels is fine when the reference counts it."""
        weights = compute_delta(np.array([[1, 0], [1, 0]]), class_counts=[5, 2])

        np.testing.assert_array_equal(weights.delta[:, 0], [1.0, 1.0])
        assert (weights.delta[:, 1] <= 1.0).all()

    def test_reference_counts_shape_checked(self) -> None:
        """Test that reference counts must cover every class."""
        with pytest.raises(ValueError, match="class_counts"):
            compute_delta(np.eye(3, dtype=np.uint8), class_counts=[1, 1])

    def test_zero_reference_count_raises(self) -> None:
        """Test that a zero in the reference counts is still refused."""
        with pytest.raises(ZeroCountClassError, match="Class 0"):
            compute_delta(np.eye(2, dtype=np.uint8), class_counts=[0, 3])

    def test_zero_count_class_raises(self) -> None:
        """Test that a class without samples is named."""
        with pytest.raises(ZeroCountClassError, match="Class 1"):
            compute_delta(np.array([[1, 0], [1, 0]]))

    def test_all_negative_row_raises(self) -> None:
        """Test that a sample without labels is named."""
        with pytest.raises(AllNegativeRowError, match="Sample 1"):
            compute_delta(np.array([[1, 1], [0, 0]]))


class TestDeltaWeights:
    """Test DeltaWeights helpers."""

    def test_rows_follow_batch_order(self, head_tail_labels: np.ndarray) -> None:
        """Test that rows() aligns δ with drawn indices."""
        weights = compute_delta(head_tail_labels)

        batch = weights.rows([50, 0, 50])

        assert batch.shape == (3, 2)
        np.testing.assert_array_equal(batch.delta[1], weights.delta[0])
        np.testing.assert_array_equal(batch.delta[0], batch.delta[2])

    @pytest.mark.parametrize(
        ("transform", "expected"),
        [
            (DeltaTransform.SQRT, 0.5),
            (DeltaTransform.SQUARE, 0.0625),
            (DeltaTransform.IDENTITY, 0.25),
        ],
    )
    def test_loss_weights(self, transform: DeltaTransform, expected: float) -> None:
        """Test each multiplier transform of δ = 0.25."""
        weights = DeltaWeights(np.full((2, 2), 0.25))

        np.testing.assert_allclose(weights.loss_weights(transform), expected)

    def test_arrays_are_read_only(self) -> None:
        """Test that stored factors cannot be mutated."""
        weights = DeltaWeights(np.ones((1, 2)))

        with pytest.raises(ValueError, match="read-only"):
            weights.sqrt_delta[0, 0] = 0.5
