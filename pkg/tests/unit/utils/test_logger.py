import logging

from src.constants import APP_LOGGER_NAME
from src.utils.logger import Logger


def test_logger_is_a_singleton():
    assert Logger().get_logger() is Logger().get_logger()
    assert Logger.get_logger().name == APP_LOGGER_NAME


def test_level_can_be_overridden():
    previous = Logger.get_logger().level
    try:
        Logger("debug")

        assert Logger.get_logger().level == logging.DEBUG
    finally:
        Logger.get_logger().setLevel(previous)
