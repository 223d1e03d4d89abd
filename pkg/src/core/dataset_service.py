"""
Dataset construction service: synthetic corpora, labeling and the three
dataset variants with their train/test splits.
"""

from pathlib import Path

from src.config import Settings
from src.dataset.corpus import corpus_generate
from src.dataset.labeling import label_dataset, label_distribution
from src.dataset.models import CorpusSpec, DatasetManifest, DatasetVariant, LabeledInstance
from src.dataset.repository import DatasetRepository
from src.dataset.split import train_test_split
from src.dataset.variants import apply_method3, apply_single_label_variant
from src.features.table import read_features_csv
from src.solvers.portfolio import read_outcomes_csv
from src.utils.logger import Logger

LABELED_TABLE = "labeled.csv"
SPLITS = ("train", "test")


def dataset_file(directory: Path, variant: DatasetVariant, split: str) -> Path:
    return directory / f"{variant.flag}_{split}.csv"


def binary_dataset_file(directory: Path, solver: str, split: str) -> Path:
    return directory / f"{DatasetVariant.METHOD3.flag}_{solver}_{split}.csv"


class DatasetService:
    """
    Service class for building labeled datasets.
    """

    def __init__(self, repository: DatasetRepository, logger: Logger, settings: Settings):
        """
        Initialize the dataset service.

        Args:
            repository (DatasetRepository): The dataset repository.
            logger (Logger): The logger instance.
            settings (Settings): The settings instance.
        """
        self.repository = repository
        self.logger = logger
        self.settings = settings

    def generate_corpus(self, specs: list[CorpusSpec], directory: Path) -> int:
        """
        Generate the graphs of every spec and write them under directory.

        Returns:
            int: Number of generated graphs.
        """
        graphs = [generated for spec in specs for generated in corpus_generate(spec)]
        self.repository.save_corpus(directory, specs, graphs)
        return len(graphs)

    def label(
        self,
        outcomes_path: Path,
        features_path: Path,
        manifest: DatasetManifest,
        out: Path,
        graph_refs: dict[str, str] | None = None,
        tie_epsilon: float | None = None,
        trivial_threshold_s: float | None = None,
    ) -> list[LabeledInstance]:
        """
        Label every instance of an outcome table and save the multi-label
        table, before any variant transform.

        Args:
            outcomes_path (Path): Outcome table.
            features_path (Path): Feature table.
            manifest (DatasetManifest): Provenance of the run.
            out (Path): Labeled table path.
            graph_refs (dict[str, str] | None): Graph file by instance id.
            tie_epsilon (float | None): Timing tolerance, the configured
                one when None.
            trivial_threshold_s (float | None): Trivial-instance threshold.

        Returns:
            list[LabeledInstance]: The labeled instances.
        """
        instances = label_dataset(
            read_outcomes_csv(outcomes_path),
            read_features_csv(features_path),
            tie_epsilon if tie_epsilon is not None else self.settings.tie_epsilon_s,
            (
                trivial_threshold_s
                if trivial_threshold_s is not None
                else self.settings.trivial_threshold_s
            ),
            self.logger,
            graph_refs,
        )
        self.repository.save_dataset(
            instances,
            out,
            manifest.model_copy(
                update={"variant": None, "label_distribution": label_distribution(instances)}
            ),
        )
        return instances

    def build(
        self,
        instances: list[LabeledInstance],
        variant: DatasetVariant,
        manifest: DatasetManifest,
        directory: Path,
    ) -> list[Path]:
        """
        Split the labeled instances, apply the variant to each part and
        save the parts.

        The split comes first, so the rows Method1 derives from one
        instance never straddle train and test. Method3 writes the
        multi-label parts plus one binary dataset per solver and part.

        Args:
            instances (list[LabeledInstance]): Labeled multi-label rows.
            variant (DatasetVariant): Variant to build.
            manifest (DatasetManifest): Provenance carrying seed and ratio.
            directory (Path): Output directory.

        Returns:
            list[Path]: The written dataset files.

        Raises:
            TooFewInstancesError: If there are fewer than two instances.
            EmptyResultError: If Method2 removes every row of a part.
        """
        split = train_test_split(instances, manifest.ratio, manifest.seed)
        written = []
        for part, rows in zip(SPLITS, (split.train, split.test), strict=True):
            transformed = apply_single_label_variant(rows, variant)
            part_manifest = manifest.model_copy(
                update={
                    "variant": variant,
                    "split": part,
                    "label_distribution": label_distribution(transformed),
                }
            )
            path = dataset_file(directory, variant, part)
            self.repository.save_dataset(transformed, path, part_manifest)
            written.append(path)

            if variant == DatasetVariant.METHOD3:
                for solver, binary in apply_method3(transformed).items():
                    binary_path = binary_dataset_file(directory, str(solver), part)
                    self.repository.save_binary_dataset(binary, binary_path, part_manifest)
                    written.append(binary_path)

        self.logger.info(
            "Built dataset variant",
            extra={
                "variant": str(variant),
                "train": len(split.train),
                "test": len(split.test),
                "files": len(written),
            },
        )
        return written

    def load_labeled(self, path: Path) -> tuple[list[LabeledInstance], DatasetManifest]:
        return self.repository.load_dataset(path)

    def corpus_specs(self, directory: Path) -> list[CorpusSpec]:
        """Generator specs of a generated corpus directory, empty for other directories."""
        manifest = self.repository.load_corpus_manifest(directory)
        return manifest.specs if manifest is not None else []

    def record_manifest(self, path: Path, manifest: DatasetManifest):
        self.repository.save_manifest(path, manifest)
