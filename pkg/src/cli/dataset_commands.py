"""
Commands that turn outcome and feature tables into labeled datasets.
"""

import argparse
from pathlib import Path

from src.cli.client import CLI, arg
from src.cli.pipeline_commands import run_manifest
from src.cli.run_config import RunConfig
from src.config import Settings
from src.constants import EXIT_OK
from src.core.dataset_service import LABELED_TABLE, DatasetService
from src.core.ingestion_service import IngestionService, instance_id_of
from src.dataset.models import DatasetManifest, DatasetVariant, LabeledInstance
from src.errors import NoInputsError
from src.utils.logger import Logger

VARIANT_FLAGS = [variant.flag for variant in DatasetVariant]


class DatasetCommands:
    """
    This class defines the labeling and dataset building commands.
    """

    def __init__(
        self,
        dataset_service: DatasetService,
        ingestion_service: IngestionService,
        logger: Logger,
        settings: Settings,
    ):
        """
        Initialize the DatasetCommands class.

        Args:
            dataset_service (DatasetService): Labeling and variant building.
            ingestion_service (IngestionService): Graph discovery for graph refs.
            logger (Logger): The logger instance.
            settings (Settings): The settings instance.
        """
        self.dataset_service = dataset_service
        self.ingestion_service = ingestion_service
        self.logger = logger
        self.settings = settings

    def _label(
        self, args: argparse.Namespace, config: RunConfig, out: Path
    ) -> tuple[list[LabeledInstance], DatasetManifest]:
        manifest = run_manifest(config, self.settings)
        graph_refs = None
        if args.graphs:
            directory = Path(args.graphs)
            graph_refs = {
                instance_id_of(path): str(path)
                for path in self.ingestion_service.discover([str(directory)])
            }
            manifest.generator_specs = self.dataset_service.corpus_specs(directory)
        instances = self.dataset_service.label(
            Path(args.outcomes),
            Path(args.features),
            manifest,
            out,
            graph_refs=graph_refs,
            tie_epsilon=config.tie_epsilon_s,
            trivial_threshold_s=config.trivial_threshold_s,
        )
        return instances, manifest

    def setup_commands(self, cli: CLI):
        label_arguments = [
            arg("--outcomes", help="Outcome table of the solve command"),
            arg("--features", help="Feature table of the features command"),
            arg("--graphs", help="Graph directory, recorded as graph references"),
            arg("--tie-epsilon", dest="tie_epsilon_s", type=float, help="Tie tolerance in seconds"),
            arg(
                "--trivial-threshold",
                dest="trivial_threshold_s",
                type=float,
                help="Drop instances all solvers finish faster than this",
            ),
        ]

        @cli.command(
            "label",
            help="Label every instance with its set of fastest exact solvers",
            arguments=[
                *label_arguments,
                arg("--output", help=f"Labeled table (default: <out>/{LABELED_TABLE})"),
            ],
        )
        def label(args: argparse.Namespace, config: RunConfig) -> int:
            """
            Write the multi-label table before any variant transform.
            """
            if not (args.outcomes and args.features):
                raise NoInputsError("label needs --outcomes and --features")
            out = Path(args.output) if args.output else config.out / LABELED_TABLE
            instances, _ = self._label(args, config, out)
            self.logger.info("Labeled instances", extra={"count": len(instances), "path": str(out)})
            return EXIT_OK

        @cli.command(
            "build",
            help="Split labeled instances and build a dataset variant",
            arguments=[
                arg("--labels", help="Labeled table of the label command"),
                *label_arguments,
                arg(
                    "--variant",
                    choices=VARIANT_FLAGS,
                    required=True,
                    help="m1 duplicates, m2 removes, m3 binarizes multi-label instances",
                ),
                arg("--ratio", type=float, help="Train fraction of the split"),
            ],
        )
        def build(args: argparse.Namespace, config: RunConfig) -> int:
            """
            Build the train/test files of one variant from a labeled table,
            or label the outcome and feature tables first.
            """
            if args.labels:
                instances, manifest = self.dataset_service.load_labeled(Path(args.labels))
            elif args.outcomes and args.features:
                instances, manifest = self._label(args, config, config.out / LABELED_TABLE)
            else:
                raise NoInputsError("build needs --labels or --outcomes with --features")

            manifest = manifest.model_copy(
                update={
                    "seed": config.seed,
                    "ratio": config.ratio,
                    "version": self.settings.app_version,
                }
            )
            written = self.dataset_service.build(
                instances, DatasetVariant.from_flag(args.variant), manifest, config.out
            )
            self.logger.info("Wrote dataset files", extra={"files": [str(p) for p in written]})
            return EXIT_OK
