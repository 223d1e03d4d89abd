"""
Main application entry point and initialization.

This module wires the logger, repository, services and command classes
together and runs one command-line invocation. It serves as the central
orchestrator of the algorithm selection pipeline.
"""

from collections.abc import Sequence
from pathlib import Path
from types import SimpleNamespace

from src.cli.client import CLI
from src.cli.dataset_commands import DatasetCommands
from src.cli.error_map import map_exception
from src.cli.model_commands import ModelCommands
from src.cli.pipeline_commands import PipelineCommands
from src.cli.report_commands import ReportCommands
from src.cli.run_config import RunConfig, overrides_from
from src.config import Settings
from src.core.dataset_service import DatasetService
from src.core.ingestion_service import IngestionService
from src.core.report_service import ReportService
from src.core.selection_service import SelectionService
from src.core.solve_service import SolveService
from src.dataset.repository import DatasetRepository
from src.utils.logger import Logger


def init_logger(state: SimpleNamespace, settings: Settings):
    """
    Initialize the logger.

    Args:
        state (SimpleNamespace): Shared application state.
        settings (Settings): The settings for the application.
    """
    state.logger = Logger(settings.log_level).get_logger()


def init_services(state: SimpleNamespace, settings: Settings):
    """
    Initialize the repository and the services.

    Args:
        state (SimpleNamespace): Shared application state.
        settings (Settings): The settings for the application.
    """
    state.repository = DatasetRepository(state.logger, settings)
    state.ingestion_service = IngestionService(state.logger, settings)
    state.solve_service = SolveService(state.logger, settings)
    state.dataset_service = DatasetService(state.repository, state.logger, settings)
    state.selection_service = SelectionService(state.repository, state.logger, settings)
    state.report_service = ReportService(state.repository, state.logger, settings)


def init_commands(state: SimpleNamespace, cli: CLI, settings: Settings):
    """
    Register the commands.

    Args:
        state (SimpleNamespace): Shared application state.
        cli (CLI): The command-line parser.
        settings (Settings): The settings for the application.
    """
    PipelineCommands(
        state.ingestion_service,
        state.solve_service,
        state.dataset_service,
        state.logger,
        settings,
    ).setup_commands(cli)
    DatasetCommands(
        state.dataset_service, state.ingestion_service, state.logger, settings
    ).setup_commands(cli)
    ModelCommands(state.selection_service, state.logger, settings).setup_commands(cli)
    ReportCommands(state.report_service, state.logger, settings).setup_commands(cli)


def main(argv: Sequence[str] | None = None) -> int:
    """
    Run one command.

    Args:
        argv (Sequence[str] | None): Arguments without the program name;
            sys.argv when None.

    Returns:
        int: The exit code, 0 on success, 1 when inputs were skipped and
            2 on failure.
    """
    settings = Settings()
    state = SimpleNamespace(settings=settings)

    init_logger(state, settings)
    init_services(state, settings)

    cli = CLI(settings)
    init_commands(state, cli, settings)
    args = cli.parse(argv)
    if args.log_level:
        Logger.set_level(args.log_level)

    try:
        config = RunConfig.from_sources(
            settings,
            Path(args.config) if args.config else None,
            overrides_from(vars(args)),
        )
        state.logger.info(
            "Running command", extra={"command": args.command, "seed": config.seed}
        )
        return args.handler(args, config)
    except Exception as e:
        return map_exception(e, state.logger)
