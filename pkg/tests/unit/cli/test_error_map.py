import pytest
from pydantic import BaseModel, ValidationError

from src.cli.error_map import map_exception
from src.constants import EXIT_FATAL
from src.errors import (
    AllUnsolvedError,
    DatasetIoError,
    KTooLargeError,
    MalformedHeaderError,
    NoInputsError,
)


class _Positive(BaseModel):
    value: int


def _validation_error() -> ValidationError:
    try:
        _Positive.model_validate({"value": "many"})
    except ValidationError as e:
        return e
    raise AssertionError("validation unexpectedly passed")


@pytest.mark.parametrize(
    "exc",
    [
        NoInputsError("nothing"),
        DatasetIoError("unreadable"),
        MalformedHeaderError("bad header"),
        AllUnsolvedError("g1"),
        KTooLargeError("k"),
        ValueError("bad"),
        FileNotFoundError("gone"),
        UnicodeDecodeError("utf-8", b"\xff", 0, 1, "invalid start byte"),
    ],
)
def test_known_errors_are_fatal_and_logged_once(mock_logger, exc):
    assert map_exception(exc, mock_logger) == EXIT_FATAL
    mock_logger.error.assert_called_once()
    mock_logger.exception.assert_not_called()


def test_domain_error_names_its_type(mock_logger):
    map_exception(AllUnsolvedError("g1"), mock_logger)

    assert mock_logger.error.call_args.kwargs["extra"] == {"error": "AllUnsolvedError"}


def test_validation_error(mock_logger):
    assert map_exception(_validation_error(), mock_logger) == EXIT_FATAL
    assert "Invalid configuration" in mock_logger.error.call_args.args[0]


def test_unexpected_error_logs_traceback(mock_logger):
    assert map_exception(RuntimeError("boom"), mock_logger) == EXIT_FATAL
    mock_logger.exception.assert_called_once()
    mock_logger.error.assert_not_called()
