"""
Data access layer for datasets and corpora.

This module persists labeled datasets as CSV tables with a JSON manifest
next to them, Method3 binary datasets with a target column, and generated
corpora as DIMACS files plus a corpus manifest.
"""

import json
from pathlib import Path

import pandas as pd

from src.config import Settings
from src.constants import (
    CORPUS_MANIFEST_FILENAME,
    FEATURE_COLUMNS,
    GRAPH_REF_COLUMN,
    INSTANCE_COLUMN,
    MANIFEST_SUFFIX,
    REQUIRED_MANIFEST_KEYS,
    TARGET_COLUMN,
    WINNER_SEPARATOR,
    WINNERS_COLUMN,
)
from src.dataset.decorator import handle_io
from src.dataset.models import (
    BinaryDataset,
    CorpusManifest,
    CorpusSpec,
    DatasetManifest,
    GeneratedGraph,
    LabeledInstance,
)
from src.errors import SchemaMismatchError
from src.features.models import GlobalFeatures
from src.features.table import R_DEGENERATE_COLUMN
from src.graph.parser import serialize_dimacs
from src.solvers.models import SolverId
from src.utils.logger import Logger

DATASET_COLUMNS = [
    INSTANCE_COLUMN,
    *FEATURE_COLUMNS,
    WINNERS_COLUMN,
    GRAPH_REF_COLUMN,
    R_DEGENERATE_COLUMN,
]


def manifest_path(path: Path) -> Path:
    return path.with_name(path.stem + MANIFEST_SUFFIX)


def _instance_row(instance: LabeledInstance) -> dict:
    return {
        INSTANCE_COLUMN: instance.instance_id,
        **{name: getattr(instance.features, name) for name in FEATURE_COLUMNS},
        WINNERS_COLUMN: WINNER_SEPARATOR.join(str(s) for s in instance.winners),
        GRAPH_REF_COLUMN: instance.graph_ref or "",
        R_DEGENERATE_COLUMN: instance.features.r_degenerate,
    }


def _row_instance(row: dict) -> LabeledInstance:
    features = GlobalFeatures.from_vector(
        [row[name] for name in FEATURE_COLUMNS],
        r_degenerate=str(row.get(R_DEGENERATE_COLUMN, "False")) == "True",
    )
    return LabeledInstance(
        instance_id=str(row[INSTANCE_COLUMN]),
        features=features,
        graph_ref=str(row.get(GRAPH_REF_COLUMN) or "") or None,
        winners=tuple(
            SolverId(name) for name in str(row[WINNERS_COLUMN]).split(WINNER_SEPARATOR)
        ),
    )


class DatasetRepository:
    """
    Repository class for dataset files.
    """

    def __init__(self, logger: Logger, settings: Settings):
        """
        Initialize the repository.

        Args:
            logger (Logger): The logger instance.
            settings (Settings): The settings instance.
        """
        self.logger = logger
        self.settings = settings

    def _read_table(self, path: Path, required: list[str]) -> pd.DataFrame:
        frame = pd.read_csv(
            path,
            dtype=str,
            keep_default_na=False,
            encoding=self.settings.file_encoding,
        )
        missing = [column for column in required if column not in frame.columns]
        if missing:
            raise SchemaMismatchError(f"{path} lacks columns {missing}")
        for name in FEATURE_COLUMNS:
            # Parsing the text ourselves keeps floats bit-exact.
            frame[name] = frame[name].map(float)
        return frame

    def _write_table(self, frame: pd.DataFrame, path: Path):
        path.parent.mkdir(parents=True, exist_ok=True)
        frame.to_csv(path, index=False, encoding=self.settings.file_encoding)

    @handle_io
    def save_manifest(self, path: Path, manifest: DatasetManifest):
        manifest_path(path).write_text(
            manifest.model_dump_json(indent=2), encoding=self.settings.file_encoding
        )

    @handle_io
    def load_manifest(self, path: Path) -> DatasetManifest:
        """
        Load the manifest that belongs to a dataset file.

        Raises:
            SchemaMismatchError: If a required key is missing.
        """
        document = json.loads(
            manifest_path(path).read_text(encoding=self.settings.file_encoding)
        )
        missing = [key for key in REQUIRED_MANIFEST_KEYS if key not in document]
        if missing:
            raise SchemaMismatchError(f"manifest of {path} lacks keys {missing}")
        return DatasetManifest.model_validate(document)

    @handle_io
    def save_dataset(
        self, instances: list[LabeledInstance], path: Path, manifest: DatasetManifest
    ):
        """
        Save a labeled dataset and its manifest.

        Args:
            instances (list[LabeledInstance]): The rows to save.
            path (Path): CSV path; the manifest goes next to it.
            manifest (DatasetManifest): Provenance of the dataset.
        """
        frame = pd.DataFrame(
            [_instance_row(instance) for instance in instances], columns=DATASET_COLUMNS
        )
        self._write_table(frame, path)
        self.save_manifest(path, manifest)
        self.logger.info(
            "Saved dataset",
            extra={"path": str(path), "rows": len(instances), "variant": manifest.variant},
        )

    @handle_io
    def load_dataset(self, path: Path) -> tuple[list[LabeledInstance], DatasetManifest]:
        """
        Load a labeled dataset and its manifest.

        Returns:
            tuple[list[LabeledInstance], DatasetManifest]: Rows and provenance.

        Raises:
            DatasetIoError: If a file cannot be read.
            SchemaMismatchError: If a column or manifest key is missing.
        """
        manifest = self.load_manifest(path)
        frame = self._read_table(path, [INSTANCE_COLUMN, *FEATURE_COLUMNS, WINNERS_COLUMN])
        instances = [_row_instance(row) for row in frame.to_dict(orient="records")]
        return instances, manifest

    @handle_io
    def save_binary_dataset(
        self, dataset: BinaryDataset, path: Path, manifest: DatasetManifest
    ):
        frame = pd.DataFrame(
            [_instance_row(instance) for instance in dataset.instances],
            columns=DATASET_COLUMNS,
        )
        frame[TARGET_COLUMN] = pd.Series(dataset.targets, dtype="int64")
        self._write_table(frame, path)
        self.save_manifest(path, manifest.model_copy(update={"solver": dataset.solver}))

    @handle_io
    def load_binary_dataset(self, path: Path) -> tuple[BinaryDataset, DatasetManifest]:
        manifest = self.load_manifest(path)
        if manifest.solver is None:
            raise SchemaMismatchError(f"manifest of {path} names no solver")
        frame = self._read_table(
            path, [INSTANCE_COLUMN, *FEATURE_COLUMNS, WINNERS_COLUMN, TARGET_COLUMN]
        )
        rows = frame.to_dict(orient="records")
        dataset = BinaryDataset(
            solver=manifest.solver,
            instances=[_row_instance(row) for row in rows],
            targets=[int(row[TARGET_COLUMN]) for row in rows],
        )
        return dataset, manifest

    @handle_io
    def save_corpus(
        self, directory: Path, specs: list[CorpusSpec], graphs: list[GeneratedGraph]
    ):
        """
        Write every generated graph as a DIMACS file plus a corpus manifest.

        Args:
            directory (Path): Target directory.
            specs (list[CorpusSpec]): Specs the graphs came from.
            graphs (list[GeneratedGraph]): The graphs.
        """
        directory.mkdir(parents=True, exist_ok=True)
        for generated in graphs:
            comments = [f"{generated.family} n={generated.node_count} p={generated.density}"]
            if generated.planted_size is not None:
                comments.append(f"planted clique size {generated.planted_size}")
            (directory / f"{generated.instance_id}.clq").write_text(
                serialize_dimacs(generated.graph, comments),
                encoding=self.settings.file_encoding,
            )

        manifest = CorpusManifest(specs=specs, graphs=graphs)
        (directory / CORPUS_MANIFEST_FILENAME).write_text(
            manifest.model_dump_json(indent=2), encoding=self.settings.file_encoding
        )
        self.logger.info(
            "Saved corpus", extra={"directory": str(directory), "graphs": len(graphs)}
        )

    @handle_io
    def load_corpus_manifest(self, directory: Path) -> CorpusManifest | None:
        path = directory / CORPUS_MANIFEST_FILENAME
        if not path.exists():
            return None
        return CorpusManifest.model_validate_json(
            path.read_text(encoding=self.settings.file_encoding)
        )
