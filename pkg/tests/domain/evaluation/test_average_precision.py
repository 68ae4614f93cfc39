import numpy as np
import pytest
from sklearn.metrics import average_precision_score

from src.domain.evaluation.average_precision import average_precision
from src.domain.evaluation.errors import NoPositivesError


def _brute_force_ap(scores: np.ndarray, labels: np.ndarray) -> float:
    """Quadratic reference: a sample ranks after every higher score and every earlier tie."""
    ranks = [
        1 + sum(1 for j in range(len(scores)) if scores[j] > scores[i] or (scores[j] == scores[i] and j < i))
        for i in range(len(scores))
    ]
    positives = [i for i in range(len(scores)) if labels[i]]
    precisions = [sum(1 for q in positives if ranks[q] <= ranks[p]) / ranks[p] for p in positives]
    return sum(precisions) / len(precisions)


class TestAveragePrecision:
    """Test average_precision()."""

    def test_hand_ranked_example(self) -> None:
        """Test positives at ranks 1 and 3."""
        ap = average_precision([0.9, 0.8, 0.7, 0.6], [1, 0, 1, 0])

        assert ap == pytest.approx(0.833333, abs=1e-6)

    def test_reversed_scores(self) -> None:
        """Test positives at ranks 3 and 4."""
        ap = average_precision([0.6, 0.7, 0.8, 0.9], [1, 0, 1, 0])

        assert ap == pytest.approx(0.416667, abs=1e-6)

    def test_perfect_ranking_is_one(self) -> None:
        """Test that positives ranked first give AP 1."""
        assert average_precision([3.0, 2.0, 1.0], [1, 1, 0]) == 1.0

    def test_ties_keep_index_order(self) -> None:
        """Test that tied scores rank by original position."""
        assert average_precision([0.5, 0.5], [0, 1]) == pytest.approx(0.5)
        assert average_precision([0.5, 0.5], [1, 0]) == 1.0

    def test_matches_brute_force(self, rng: np.random.Generator) -> None:
        """Test random instances with ties against the quadratic reference."""
        for _ in range(1000):
            n = int(rng.integers(1, 25))
            scores = rng.integers(0, 5, size=n).astype(np.float64)
            labels = (rng.random(n) < 0.4).astype(np.uint8)  # noqa: PLR2004
            labels[rng.integers(n)] = 1

            assert average_precision(scores, labels) == pytest.approx(
                _brute_force_ap(scores, labels), abs=1e-12
            )

    def test_matches_sklearn_without_ties(self, rng: np.random.Generator) -> None:
        """Test continuous scores against scikit-learn."""
        for _ in range(50):
            scores = rng.random(200)
            labels = (rng.random(200) < 0.1).astype(np.uint8)  # noqa: PLR2004
            labels[0] = 1

            assert average_precision(scores, labels) == pytest.approx(
                average_precision_score(labels, scores), abs=1e-12
            )

    def test_no_positive_raises(self) -> None:
        """Test that AP is undefined without positives."""
        with pytest.raises(NoPositivesError):
            average_precision([0.1, 0.2], [0, 0])

    def test_length_mismatch_raises(self) -> None:
        """Test that scores and labels must have the same length."""
        with pytest.raises(ValueError, match="differ in length"):
            average_precision([0.1, 0.2, 0.3], [0, 1])
