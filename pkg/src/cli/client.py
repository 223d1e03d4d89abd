"""
Command-line parser configuration.

This module provides the CLI class that owns the argparse parser, its
global flags and the registry of subcommands.
"""

import argparse
from collections.abc import Callable, Sequence
from typing import Any

from pydantic import BaseModel, Field

from src.cli.run_config import RunConfig
from src.config import Settings

Handler = Callable[[argparse.Namespace, RunConfig], int]


class Argument(BaseModel):
    flags: tuple[str, ...]
    options: dict[str, Any] = Field(default_factory=dict)


def arg(*flags: str, **options: Any) -> Argument:
    return Argument(flags=flags, options=options)


class CLI:
    """
    CLI builds the argument parser and dispatches to command handlers.
    """

    def __init__(self, settings: Settings):
        """
        Initialize the parser with the global flags.

        Args:
            settings: Settings object containing application settings.
        """
        self.parser = argparse.ArgumentParser(
            prog=settings.app_name, description=settings.app_description
        )
        self.parser.add_argument(
            "--version", action="version", version=f"%(prog)s {settings.app_version}"
        )
        self.parser.add_argument("--seed", type=int, help="Seed of every random choice")
        self.parser.add_argument("--jobs", type=int, help="Worker processes for per-graph work")
        self.parser.add_argument("--out", help="Output directory")
        self.parser.add_argument("--config", help="JSON config file with run settings")
        self.parser.add_argument(
            "--log-level",
            choices=["DEBUG", "INFO", "WARNING", "ERROR"],
            type=str.upper,
            help="Log level",
        )
        self.subparsers = self.parser.add_subparsers(dest="command", required=True)

    def command(self, name: str, help: str, arguments: Sequence[Argument] = ()):
        """
        Register the decorated function as the handler of a subcommand.

        Args:
            name (str): Subcommand name.
            help (str): One-line description.
            arguments (Sequence[Argument]): Subcommand arguments.
        """

        def register(handler: Handler) -> Handler:
            parser = self.subparsers.add_parser(name, help=help, description=help)
            for argument in arguments:
                parser.add_argument(*argument.flags, **argument.options)
            parser.set_defaults(handler=handler)
            return handler

        return register

    def parse(self, argv: Sequence[str] | None = None) -> argparse.Namespace:
        return self.parser.parse_args(argv)
