"""
Application logging configuration and utilities.

This module provides a centralized logging system using JSON formatting
for structured logging, so pipeline runs can be grepped and aggregated
by instance id, solver or command.
"""

import logging

import json_log_formatter

from src.constants import APP_LOGGER_NAME


class Logger:
    """
    Logger configures and provides a singleton JSON-formatted logger for the toolkit.

    This logger outputs logs in JSON format, suitable for structured logging and
    for collecting long solver runs into log management systems.
    """

    _logger: logging.Logger | None = None

    def __init__(self, level: str | None = None):
        """
        Logger
        -------------
        Initialize the Logger and set up JSON logging if not already configured.
        A level name, when given, replaces the current level.
        """
        if self._logger is None:
            self.setup_logging()
        if level:
            self.set_level(level)

    @classmethod
    def setup_logging(cls):
        """
        Setup Logging
        -------------
        Set up a JSON log formatter and attach it to the logger instance.
        """
        if cls._logger is None:
            json_handler = logging.StreamHandler()
            json_handler.setFormatter(json_log_formatter.JSONFormatter())

            cls._logger = logging.getLogger(APP_LOGGER_NAME)
            cls._logger.addHandler(json_handler)
            cls._logger.setLevel(logging.INFO)
            cls._logger.propagate = False

    @classmethod
    def set_level(cls, level: str):
        """
        Set Level
        -------------
        Change the level of the shared logger, e.g. from the `--log-level` flag.
        """
        cls.setup_logging()
        cls._logger.setLevel(level.upper())

    @classmethod
    def get_logger(cls) -> logging.Logger:
        """
        Get Logger
        -------------
        Retrieve the singleton logger instance for use throughout the toolkit.
        """
        cls.setup_logging()
        return cls._logger
