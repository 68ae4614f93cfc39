import numpy as np
import numpy.typing as npt

from src.domain.evaluation.errors import NoPositivesError


def average_precision(scores: npt.ArrayLike, labels: npt.ArrayLike) -> float:
    """Rank-based AP: mean over positives of precision at their rank.

    Ranking is by descending score; ties keep the original index order.

    Raises:
        NoPositivesError: `labels` has no positive entry
    """
    s = np.asarray(scores, dtype=np.float64).ravel()
    y = np.asarray(labels).ravel().astype(bool)
    if s.shape != y.shape:
        raise ValueError(f"scores {s.shape} and labels {y.shape} differ in length")
    if not y.any():
        raise NoPositivesError()

    ranked = y[np.argsort(-s, kind="stable")]
    hits = np.cumsum(ranked)
    precision = hits / np.arange(1, ranked.size + 1)
    return float(precision[ranked].mean())
