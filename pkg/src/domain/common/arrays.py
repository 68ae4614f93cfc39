"""Array aliases and coercion helpers shared by the numerical domains."""

import numpy as np
import numpy.typing as npt

FloatArray = npt.NDArray[np.float64]
IndexArray = npt.NDArray[np.int64]
BinaryArray = npt.NDArray[np.uint8]


def as_float_matrix(values: npt.ArrayLike) -> FloatArray:
    """Return a float64 view/copy of a 2-D array-like."""
    matrix = np.asarray(values, dtype=np.float64)
    if matrix.ndim != 2:  # noqa: PLR2004
        raise ValueError(f"Expected a 2-D array, got shape {matrix.shape}")
    return matrix


def as_binary_matrix(values: npt.ArrayLike) -> BinaryArray:
    """Return a uint8 0/1 matrix, rejecting anything that is not binary."""
    matrix = np.asarray(values)
    if matrix.ndim != 2:  # noqa: PLR2004
        raise ValueError(f"Expected a 2-D label matrix, got shape {matrix.shape}")
    if matrix.size and not np.isin(matrix, (0, 1)).all():
        raise ValueError("Label matrix must only contain 0 and 1")
    return matrix.astype(np.uint8, copy=False)
