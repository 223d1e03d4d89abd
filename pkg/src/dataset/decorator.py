"""
File access decorators for the dataset repository.

This module provides a decorator that turns low-level I/O and parsing
failures of repository methods into the toolkit's dataset errors.
"""

import json
from functools import wraps

import pandas as pd

from src.errors import DatasetIoError, SchemaMismatchError


def handle_io(f):
    """
    Decorator to handle file access errors of repository methods.
    """

    @wraps(f)
    def wrapper(self, *args, **kwargs):
        try:
            return f(self, *args, **kwargs)

        except OSError as e:
            self.logger.error(f"File access error: {e}")
            raise DatasetIoError(f"File access error: {e}") from e

        except (
            json.JSONDecodeError,
            pd.errors.ParserError,
            pd.errors.EmptyDataError,
        ) as e:
            self.logger.error(f"Unreadable document: {e}")
            raise SchemaMismatchError(f"Unreadable document: {e}") from e

    return wrapper
