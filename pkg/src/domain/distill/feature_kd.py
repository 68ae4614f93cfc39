import numpy as np
import numpy.typing as npt

from src.domain.distill.errors import DistillShapeMismatchError
from src.domain.distill.kd_result import KdResult

NORM_EPS = 1e-12


def feature_kd(v_teacher: npt.ArrayLike, v_student: npt.ArrayLike) -> KdResult:
    """Mean cosine distance 1 − cos(v_t, v_s) over the batch.

    With both norms above ε the distance is evaluated as ½‖v̂_t − v̂_s‖²
    (equal to 1 − cos), which is exactly 0 for identical rows. Two
    all-zero rows count as identical. Only the student receives a gradient,
    and rows where either vector is zero receive none.

    Raises:
        DistillShapeMismatchError: Batch or embedding widths differ
    """
    vt = np.asarray(v_teacher, dtype=np.float64)
    vs = np.asarray(v_student, dtype=np.float64)
    if vt.ndim != 2 or vt.shape != vs.shape:  # noqa: PLR2004
        raise DistillShapeMismatchError(
            f"Teacher embeddings {vt.shape} and student embeddings {vs.shape} differ."
        )

    batch = vt.shape[0]
    nt = np.linalg.norm(vt, axis=1)
    ns = np.linalg.norm(vs, axis=1)
    safe_nt = np.maximum(nt, NORM_EPS)[:, None]
    safe_ns = np.maximum(ns, NORM_EPS)[:, None]
    cos = (vt * vs).sum(axis=1) / (safe_nt[:, 0] * safe_ns[:, 0])

    both = (nt > NORM_EPS) & (ns > NORM_EPS)
    neither = (nt <= NORM_EPS) & (ns <= NORM_EPS)
    unit_gap = 0.5 * np.square(vt / safe_nt - vs / safe_ns).sum(axis=1)
    distance = np.where(both, unit_gap, np.where(neither, 0.0, 1.0 - cos))
    distance = np.clip(distance, 0.0, 2.0)

    grad = -(vt / (safe_nt * safe_ns) - cos[:, None] * vs / np.square(safe_ns)) / batch
    # Direction is undefined at a zero vector.
    grad[~both] = 0.0
    return KdResult(value=float(distance.mean()), grad=grad)
