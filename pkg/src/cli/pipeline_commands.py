"""
Commands of the data collection stages: corpus generation, feature
extraction and portfolio solving.
"""

import argparse
from pathlib import Path

from src.cli.client import CLI, arg
from src.cli.run_config import RunConfig
from src.config import Settings
from src.constants import EXIT_OK, EXIT_PARTIAL
from src.core.dataset_service import DatasetService
from src.core.ingestion_service import IngestionService
from src.core.solve_service import SolveService
from src.dataset.corpus import default_corpus_specs
from src.dataset.models import DatasetManifest
from src.utils.logger import Logger

FEATURES_FILE = "features.csv"
OUTCOMES_FILE = "outcomes.csv"
CORPUS_DIRECTORY = "corpus"


def run_manifest(config: RunConfig, settings: Settings) -> DatasetManifest:
    """Provenance of a table that is not (yet) a dataset variant."""
    return DatasetManifest(
        variant=None,
        seed=config.seed,
        ratio=config.ratio,
        budget_s=config.time_limit_s,
        tie_epsilon_s=config.tie_epsilon_s,
        version=settings.app_version,
    )


class PipelineCommands:
    """
    This class defines the commands that produce the raw tables.
    """

    def __init__(
        self,
        ingestion_service: IngestionService,
        solve_service: SolveService,
        dataset_service: DatasetService,
        logger: Logger,
        settings: Settings,
    ):
        """
        Initialize the PipelineCommands class.

        Args:
            ingestion_service (IngestionService): Graph discovery and features.
            solve_service (SolveService): Portfolio solving.
            dataset_service (DatasetService): Corpus generation and manifests.
            logger (Logger): The logger instance.
            settings (Settings): The settings instance.
        """
        self.ingestion_service = ingestion_service
        self.solve_service = solve_service
        self.dataset_service = dataset_service
        self.logger = logger
        self.settings = settings

    def setup_commands(self, cli: CLI):
        @cli.command(
            "gen-corpus",
            help="Generate a seeded synthetic corpus of DIMACS graphs",
            arguments=[
                arg("--count", dest="corpus_count", type=int, help="Number of graphs"),
                arg(
                    "--nodes",
                    dest="corpus_node_range",
                    type=int,
                    nargs=2,
                    metavar=("MIN", "MAX"),
                    help="Node count range",
                ),
                arg(
                    "--density",
                    dest="corpus_density_range",
                    type=float,
                    nargs=2,
                    metavar=("MIN", "MAX"),
                    help="Edge density range",
                ),
                arg("--dir", help="Corpus directory (default: <out>/corpus)"),
            ],
        )
        def gen_corpus(args: argparse.Namespace, config: RunConfig) -> int:
            """
            Generate the three-family default corpus.
            """
            directory = Path(args.dir) if args.dir else config.out / CORPUS_DIRECTORY
            specs = default_corpus_specs(
                config.corpus_count,
                config.seed,
                config.corpus_node_range,
                config.corpus_density_range,
            )
            count = self.dataset_service.generate_corpus(specs, directory)
            self.logger.info(
                "Generated corpus", extra={"directory": str(directory), "graphs": count}
            )
            return EXIT_OK

        @cli.command(
            "features",
            help="Extract the global features of graph files",
            arguments=[
                arg("inputs", nargs="+", help="Graph files, directories or glob patterns"),
                arg("--output", help=f"Feature table (default: <out>/{FEATURES_FILE})"),
            ],
        )
        def features(args: argparse.Namespace, config: RunConfig) -> int:
            """
            Write one feature row per parseable graph.

            Returns:
                int: EXIT_PARTIAL when some inputs were skipped.

            Raises:
                NoInputsError: If no graph could be parsed.
            """
            out = Path(args.output) if args.output else config.out / FEATURES_FILE
            paths = self.ingestion_service.discover(args.inputs)
            run = self.ingestion_service.extract_features(paths, config.jobs)
            self.ingestion_service.write_features(run, out)
            self.dataset_service.record_manifest(out, run_manifest(config, self.settings))
            return EXIT_PARTIAL if run.failures else EXIT_OK

        @cli.command(
            "solve",
            help="Run the four solvers on graph files",
            arguments=[
                arg("inputs", nargs="+", help="Graph files, directories or glob patterns"),
                arg("--time-limit", dest="time_limit_s", type=float, help="Seconds per solver"),
                arg("--node-limit", dest="node_limit", type=int, help="Search nodes per solver"),
                arg("--output", help=f"Outcome table (default: <out>/{OUTCOMES_FILE})"),
            ],
        )
        def solve(args: argparse.Namespace, config: RunConfig) -> int:
            """
            Solve every graph not already complete in the outcome table.
            """
            out = Path(args.output) if args.output else config.out / OUTCOMES_FILE
            paths = self.ingestion_service.discover(args.inputs)
            run = self.solve_service.solve(paths, config.budget, out, config.jobs)
            if run.solved:
                self.dataset_service.record_manifest(out, run_manifest(config, self.settings))
            self.logger.info(
                "Finished solving",
                extra={
                    "solved": len(run.solved),
                    "skipped": len(run.skipped),
                    "failures": len(run.failures),
                },
            )
            return EXIT_PARTIAL if run.failures else EXIT_OK
