from unittest.mock import MagicMock

import pytest
from pytest_mock import MockerFixture

from src.cli.error_management import EXIT_RUNTIME
from src.cli.error_management import EXIT_USAGE
from src.cli.error_management import UsageError
from src.cli.error_management import handle_exception
from src.domain.dataset.errors import InvalidDatasetError
from src.domain.dataset.errors import TruncatedDatasetError


@pytest.fixture
def mock_logger(mocker: MockerFixture) -> MagicMock:
    """Create a mock error handler logger."""
    return mocker.patch("src.cli.error_management.error_handlers.logger")


class TestHandleException:
    """Test handle_exception()."""

    def test_domain_error_is_reported_once(
        self, mock_logger: MagicMock, capsys: pytest.CaptureFixture[str]
    ) -> None:
        """Test that a domain error prints one summary line and logs its details at debug level."""
        code = handle_exception(TruncatedDatasetError("labels.csv is empty."))

        assert code == EXIT_RUNTIME
        err = capsys.readouterr().err
        assert err.count("labels.csv is empty.") == 1
        assert "error [DatasetTruncated]: labels.csv is empty." in err
        mock_logger.debug.assert_called_once()
        assert mock_logger.debug.call_args.kwargs["exc_info"] is False
        response = mock_logger.debug.call_args.kwargs["extra"]["error_response"]
        assert response["code"] == "DatasetTruncated"
        mock_logger.error.assert_not_called()
        mock_logger.exception.assert_not_called()

    def test_usage_error(self, mock_logger: MagicMock, capsys: pytest.CaptureFixture[str]) -> None:
        """Test that usage errors map to the usage exit code."""
        assert handle_exception(UsageError("a command is required")) == EXIT_USAGE
        assert "error [UsageError]: a command is required" in capsys.readouterr().err

    def test_unexpected_error_keeps_traceback(
        self, mock_logger: MagicMock, capsys: pytest.CaptureFixture[str]
    ) -> None:
        """Test that an unexpected error is logged with its traceback."""
        assert handle_exception(RuntimeError("boom")) == EXIT_RUNTIME

        assert "error [InternalError]: boom" in capsys.readouterr().err
        assert mock_logger.debug.call_args.kwargs["exc_info"] is True

    def test_exception_group_lists_every_leaf(
        self, mock_logger: MagicMock, capsys: pytest.CaptureFixture[str]
    ) -> None:
        """Test that grouped validation failures are listed one per line."""
        group = ExceptionGroup(
            "Dataset validation failed",
            [InvalidDatasetError("first problem"), InvalidDatasetError("second problem")],
        )

        assert handle_exception(group) == EXIT_RUNTIME

        err = capsys.readouterr().err
        assert "error [DatasetInvalid]" in err
        assert "  - InvalidDatasetError: first problem" in err
        assert "  - InvalidDatasetError: second problem" in err
