import numpy as np
import pytest

from src.domain.common.arrays import as_binary_matrix
from src.domain.common.arrays import as_float_matrix
from src.domain.common.seeding import STREAM_PHASE1
from src.domain.common.seeding import STREAM_PHASE2
from src.domain.common.seeding import derive_generator
from src.domain.common.seeding import derive_seed


class TestSeeding:
    """Test derive_generator() and derive_seed()."""

    def test_same_stream_same_draws(self) -> None:
        """Test that a seed and stream always give the same numbers."""
        first = derive_generator(5, STREAM_PHASE1).random(4)
        second = derive_generator(5, STREAM_PHASE1).random(4)

        np.testing.assert_array_equal(first, second)

    def test_streams_are_independent(self) -> None:
        """Test that sibling streams of one seed differ."""
        phase1 = derive_generator(5, STREAM_PHASE1).random(4)
        phase2 = derive_generator(5, STREAM_PHASE2).random(4)

        assert not np.array_equal(phase1, phase2)

    def test_derived_seed_range(self) -> None:
        """Test that derived seeds are stable 63-bit integers."""
        seeds = {derive_seed(seed, STREAM_PHASE1, index) for seed in range(3) for index in range(3)}

        assert len(seeds) == 9  # noqa: PLR2004
        assert all(0 <= s < 2**63 for s in seeds)
        assert derive_seed(1, 2) == derive_seed(1, 2)


class TestArrays:
    """Test matrix coercion helpers."""

    def test_float_matrix(self) -> None:
        """Test that integers become float64."""
        assert as_float_matrix([[1, 2]]).dtype == np.float64

    def test_float_matrix_rejects_vectors(self) -> None:
        """Test that 1-D input is refused."""
        with pytest.raises(ValueError, match="2-D"):
            as_float_matrix([1.0, 2.0])

    def test_binary_matrix(self) -> None:
        """Test that 0/1 input becomes uint8."""
        matrix = as_binary_matrix(np.array([[0, 1], [1, 1]], dtype=np.int64))

        assert matrix.dtype == np.uint8
        assert matrix.sum() == 3  # noqa: PLR2004

    def test_binary_matrix_rejects_other_values(self) -> None:
        """Test that non-binary labels are refused."""
        with pytest.raises(ValueError, match="only contain 0 and 1"):
            as_binary_matrix([[0, 2]])
