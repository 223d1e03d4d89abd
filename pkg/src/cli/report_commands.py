"""
Comparison report command.
"""

import argparse
from pathlib import Path

from src.cli.client import CLI, arg
from src.cli.run_config import RunConfig
from src.config import Settings
from src.constants import EXIT_OK
from src.core.report_service import ReportService
from src.errors import NoInputsError
from src.utils.logger import Logger


class ReportCommands:
    """
    This class defines the report command.
    """

    def __init__(self, report_service: ReportService, logger: Logger, settings: Settings):
        """
        Initialize the ReportCommands class.

        Args:
            report_service (ReportService): Comparison tables.
            logger (Logger): The logger instance.
            settings (Settings): The settings instance.
        """
        self.report_service = report_service
        self.logger = logger
        self.settings = settings

    def setup_commands(self, cli: CLI):
        @cli.command(
            "report",
            help="Compare evaluation reports, feature importances or encoder ablations",
            arguments=[
                arg("reports", nargs="*", help="Report documents of the evaluate command"),
                arg(
                    "--importance",
                    nargs="+",
                    metavar="MODEL_FILE",
                    help="Decision tree or random forest model documents",
                ),
                arg(
                    "--ablation",
                    dest="run_ablation",
                    action="store_true",
                    help="Train and compare the four encoder variants",
                ),
                arg("--train", dest="train_dataset", help="Training dataset of the ablation"),
                arg("--test", dest="test_dataset", help="Test dataset of the ablation"),
            ],
        )
        def report(args: argparse.Namespace, config: RunConfig) -> int:
            """
            Write every requested table into the output directory.

            Raises:
                NoInputsError: If no table was requested.
            """
            if not (args.reports or args.importance or args.run_ablation):
                raise NoInputsError("report needs report files, --importance or --ablation")

            if args.reports:
                best = self.report_service.compare([Path(p) for p in args.reports], config.out)
                print(f"best: {best.model} on {best.variant} (macro F1 {best.macro_f1:.4f})")
            if args.importance:
                self.report_service.importance([Path(p) for p in args.importance], config.out)
            if args.run_ablation:
                if not (args.train_dataset and args.test_dataset):
                    raise NoInputsError("report --ablation needs --train and --test")
                self.report_service.ablation(
                    Path(args.train_dataset), Path(args.test_dataset), config.train, config.out
                )
            return EXIT_OK
