from enum import StrEnum

import pytest

from src.cli.error_management.error_code import ErrorCode
from src.helpers.enum import merge_str_enums


class First(StrEnum):
    A = "a"
    SHARED = "shared"


class Second(StrEnum):
    B = "b"
    SHARED = "shared"


class Conflicting(StrEnum):
    A = "other"


class TestMergeStrEnums:
    """Test merge_str_enums() function."""

    def test_merges_members(self) -> None:
        """Test that members of every enum are kept once."""
        merged = merge_str_enums("Merged", First, Second)

        assert [m.name for m in merged] == ["A", "SHARED", "B"]
        assert merged["B"] == "b"

    def test_conflict_raises(self) -> None:
        """Test that one name with two values is rejected."""
        with pytest.raises(ValueError, match="Conflicting values for A"):
            merge_str_enums("Merged", First, Conflicting)

    def test_application_error_codes(self) -> None:
        """Test that the CLI error code covers the CLI and the domain areas."""
        names = set(ErrorCode.__members__)

        assert "CLI_USAGE" in names
        assert "CLI_INVALID_CONFIG" in names
        assert len(names) > 4  # noqa: PLR2004
