"""
Error mapping for the CLI.

This module maps exceptions raised by commands to process exit codes,
logging each one once.
"""

from pydantic import ValidationError

from src.constants import EXIT_FATAL
from src.errors import CliqueSelectError, DatasetIoError, NoInputsError
from src.utils.logger import Logger


def map_exception(exc: Exception, logger: Logger) -> int:
    """
    Map an exception to the exit code of the failed command.

    Args:
        exc (Exception): The exception to be mapped.
        logger (Logger): The logger to use for logging.

    Returns:
        int: The exit code.
    """
    if isinstance(exc, NoInputsError):
        logger.error(f"No inputs: {exc}")
        return EXIT_FATAL

    if isinstance(exc, DatasetIoError):
        logger.error(f"File access error: {exc}")
        return EXIT_FATAL

    if isinstance(exc, CliqueSelectError):
        logger.error(f"{type(exc).__name__}: {exc}", extra={"error": type(exc).__name__})
        return EXIT_FATAL

    if isinstance(exc, ValidationError):
        logger.error(f"Invalid configuration: {exc}")
        return EXIT_FATAL

    if isinstance(exc, UnicodeDecodeError):
        logger.error(f"File encoding error: {exc}")
        return EXIT_FATAL

    if isinstance(exc, (ValueError, OSError)):
        logger.error(f"Invalid input: {exc}")
        return EXIT_FATAL

    logger.exception(f"Unexpected error: {exc}")
    return EXIT_FATAL
