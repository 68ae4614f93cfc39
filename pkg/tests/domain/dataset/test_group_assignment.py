import pytest
from pydantic import ValidationError

from src.domain.dataset.errors import InvalidThresholdsError
from src.domain.dataset.value_objects.group_assignment import GroupThresholds
from src.domain.dataset.value_objects.group_assignment import RatioThresholds
from src.domain.dataset.value_objects.group_assignment import ShotGroup
from src.domain.dataset.value_objects.group_assignment import assign_groups
from src.domain.dataset.value_objects.group_assignment import assign_groups_by_ratio


class TestAssignGroups:
    """Test assign_groups() with absolute thresholds."""

    def test_one_class_per_group(self) -> None:
        """Test counts [1000, 60, 5] with (100, 10)."""
        groups = assign_groups([1000, 60, 5], (100, 10))

        assert groups.group_of_class == (ShotGroup.MANY, ShotGroup.MEDIUM, ShotGroup.FEW)

    def test_all_many(self) -> None:
        """Test that counts above t_many all land in many."""
        groups = assign_groups([500, 100, 250], GroupThresholds())

        assert set(groups.group_of_class) == {ShotGroup.MANY}
        assert groups.classes_in(ShotGroup.FEW) == []

    def test_boundaries_are_inclusive_below(self) -> None:
        """Test that t_many is many and t_few is medium."""
        groups = assign_groups([100, 99, 10, 9], (100, 10))

        assert groups.group_of_class == (
            ShotGroup.MANY,
            ShotGroup.MEDIUM,
            ShotGroup.MEDIUM,
            ShotGroup.FEW,
        )

    def test_default_thresholds(self) -> None:
        """Test that the default cut-points are 100 and 10."""
        groups = assign_groups([150, 50, 9], GroupThresholds())

        assert groups.thresholds == GroupThresholds(t_many=100, t_few=10)
        assert groups.classes_in(ShotGroup.MEDIUM) == [1]

    def test_monotone_in_count(self) -> None:
        """Test that a larger count never lands in a rarer group."""
        rank = {ShotGroup.FEW: 0, ShotGroup.MEDIUM: 1, ShotGroup.MANY: 2}
        counts = list(range(1, 200))

        groups = assign_groups(counts, (100, 10)).group_of_class

        assert all(rank[a] <= rank[b] for a, b in zip(groups, groups[1:], strict=False))

    @pytest.mark.parametrize("thresholds", [(10, 10), (10, 100), (5, 0)])
    def test_invalid_tuple_thresholds_raise(self, thresholds: tuple[int, int]) -> None:
        """Test that t_many > t_few >= 1 is enforced."""
        with pytest.raises(InvalidThresholdsError):
            assign_groups([1, 2], thresholds)

    def test_invalid_model_thresholds_raise(self) -> None:
        """Test that the thresholds model validates its order."""
        with pytest.raises(InvalidThresholdsError):
            GroupThresholds(t_many=10, t_few=20)

    def test_unknown_threshold_key_is_rejected(self) -> None:
        """Test that unexpected keys are refused."""
        with pytest.raises(ValidationError):
            GroupThresholds.model_validate({"t_many": 100, "t_few": 10, "t_mid": 50})


class TestAssignGroupsByRatio:
    """Test assign_groups_by_ratio() relative to the largest class."""

    def test_ratio_rule(self) -> None:
        """Test groups relative to the head class count."""
        groups = assign_groups_by_ratio(
            [200, 100, 20, 5], RatioThresholds(r_many=0.5, r_few=0.1)
        )

        assert groups.group_of_class == (
            ShotGroup.MANY,
            ShotGroup.MANY,
            ShotGroup.MEDIUM,
            ShotGroup.FEW,
        )

    def test_inverted_ratios_raise(self) -> None:
        """Test that r_many must exceed r_few."""
        with pytest.raises(InvalidThresholdsError):
            RatioThresholds(r_many=0.1, r_few=0.5)

    def test_all_empty_raises(self) -> None:
        """Test that ratios need a non-empty class."""
        with pytest.raises(InvalidThresholdsError):
            assign_groups_by_ratio([0, 0], RatioThresholds(r_many=0.5, r_few=0.1))
