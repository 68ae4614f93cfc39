import math

import pytest

from src.domain.model.errors import InvalidValLossError
from src.domain.model.lr_schedule import LrSchedule
from src.domain.model.lr_schedule import schedule_step


def _run(losses: list[float], sched: LrSchedule | None = None) -> LrSchedule:
    sched = sched or LrSchedule()
    for value in losses:
        sched = schedule_step(sched, value)
    return sched


class TestScheduleStep:
    """Test schedule_step() plateau handling."""

    def test_strictly_decreasing_keeps_initial_rate(self) -> None:
        """Test that improving epochs never reduce the rate."""
        sched = _run([1.0 - 0.01 * epoch for epoch in range(30)])

        assert sched.lr == 1e-3
        assert sched.epochs_since_improvement == 0

    def test_five_flat_epochs_reduce_tenfold(self) -> None:
        """Test the patience of five epochs."""
        sched = _run([1.0] * 6)

        assert sched.lr == pytest.approx(1e-4)
        assert sched.epochs_since_improvement == 0

    def test_four_flat_epochs_keep_rate(self) -> None:
        """Test that the reduction waits for the full patience."""
        sched = _run([1.0] * 5)

        assert sched.lr == 1e-3
        assert sched.epochs_since_improvement == 4  # noqa: PLR2004

    def test_thirty_flat_epochs_hit_floor(self) -> None:
        """Test that the rate is clamped at 1e-7."""
        sched = _run([1.0] * 31)

        assert sched.lr == 1e-7

    def test_tiny_improvement_does_not_count(self) -> None:
        """Test the 1e-8 improvement tolerance."""
        sched = _run([1.0, 1.0 - 1e-9])

        assert sched.best_val_loss == 1.0
        assert sched.epochs_since_improvement == 1

    def test_improvement_resets_counter(self) -> None:
        """Test that a real improvement restarts the patience window."""
        sched = _run([1.0, 1.0, 1.0, 0.5])

        assert sched.best_val_loss == 0.5  # noqa: PLR2004
        assert sched.epochs_since_improvement == 0

    def test_rate_never_increases(self) -> None:
        """Test that the rate is monotone over a noisy trace."""
        sched = LrSchedule()
        previous = sched.lr
        for value in [1.0, 2.0, 0.9, 0.9, 3.0, 0.95, 1.0, 1.0, 0.1, 0.2] * 5:
            sched = schedule_step(sched, value)
            assert sched.lr <= previous
            assert sched.lr >= sched.floor
            previous = sched.lr

    def test_non_finite_loss_raises(self) -> None:
        """Test that NaN validation losses are refused."""
        with pytest.raises(InvalidValLossError):
            schedule_step(LrSchedule(), math.nan)

    def test_invalid_factor_raises(self) -> None:
        """Test that the reduction factor must be in (0, 1)."""
        with pytest.raises(ValueError, match="factor"):
            LrSchedule(factor=1.5)
