"""
Graph ingestion and feature extraction service.

This module resolves the graph inputs of a command (files, directories or
glob patterns), parses them and computes their global features, optionally
spreading the per-graph work over several processes.
"""

import glob
from collections.abc import Iterable
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from pydantic import BaseModel

from src.config import Settings
from src.constants import GRAPH_FILE_SUFFIXES
from src.errors import CliqueSelectError, NoInputsError
from src.features.extraction import extract_global
from src.features.models import GlobalFeatures
from src.features.table import write_features_csv
from src.graph.parser import load_graph
from src.utils.logger import Logger


class FeatureRun(BaseModel):
    """
    Result of a feature extraction run.

    Args:
        features (dict[str, GlobalFeatures]): Features by instance id.
        graph_refs (dict[str, str]): Graph file path by instance id.
        failures (dict[str, str]): Error message by skipped file.
    """

    features: dict[str, GlobalFeatures]
    graph_refs: dict[str, str]
    failures: dict[str, str]


def instance_id_of(path: Path) -> str:
    return path.stem


def _features_job(path: str, encoding: str) -> tuple[str, GlobalFeatures | None, str | None]:
    try:
        return path, extract_global(load_graph(Path(path), encoding)), None
    except (CliqueSelectError, OSError, UnicodeDecodeError) as e:
        return path, None, f"{type(e).__name__}: {e}"


def run_jobs(function, arguments: list[tuple], jobs: int) -> list:
    """Apply function to every argument tuple, in order, on up to jobs processes."""
    if jobs <= 1 or len(arguments) <= 1:
        return [function(*args) for args in arguments]
    with ProcessPoolExecutor(max_workers=jobs) as executor:
        return list(executor.map(function, *zip(*arguments)))


class IngestionService:
    """
    Service class for reading graphs and extracting their features.
    """

    def __init__(self, logger: Logger, settings: Settings):
        """
        Initialize the ingestion service.

        Args:
            logger (Logger): The logger instance.
            settings (Settings): The settings instance.
        """
        self.logger = logger
        self.settings = settings

    def discover(self, inputs: Iterable[str]) -> list[Path]:
        """
        Expand files, directories and glob patterns into graph files.

        Directories contribute every file with a known graph suffix.
        Duplicate paths are dropped; the result is sorted.

        Args:
            inputs (Iterable[str]): Paths or patterns.

        Returns:
            list[Path]: The graph files.

        Raises:
            NoInputsError: If nothing matches.
        """
        inputs = list(inputs)
        found: set[Path] = set()
        for pattern in inputs:
            for match in sorted(glob.glob(pattern)) or [pattern]:
                path = Path(match)
                if path.is_dir():
                    found.update(
                        child
                        for child in path.iterdir()
                        if child.is_file() and child.suffix.lower() in GRAPH_FILE_SUFFIXES
                    )
                elif path.is_file():
                    found.add(path)
                else:
                    self.logger.warning("Input does not exist", extra={"input": pattern})

        if not found:
            raise NoInputsError(f"no graph files found in {list(inputs)}")
        paths = sorted(found)
        self.logger.info("Discovered graph files", extra={"count": len(paths)})
        return paths

    def extract_features(self, paths: list[Path], jobs: int = 1) -> FeatureRun:
        """
        Parse every graph and compute its features; unreadable graphs are
        logged and skipped.

        Args:
            paths (list[Path]): Graph files.
            jobs (int): Worker processes.

        Returns:
            FeatureRun: Features of the parsed graphs and the failures.

        Raises:
            NoInputsError: If no graph could be processed.
        """
        results = run_jobs(
            _features_job,
            [(str(path), self.settings.file_encoding) for path in paths],
            jobs,
        )

        features: dict[str, GlobalFeatures] = {}
        graph_refs: dict[str, str] = {}
        failures: dict[str, str] = {}
        for path, graph_features, error in results:
            instance_id = instance_id_of(Path(path))
            if error is not None:
                failures[path] = error
                self.logger.warning(
                    "Skipping unreadable graph", extra={"path": path, "error": error}
                )
                continue
            if instance_id in features:
                failures[path] = f"duplicate instance id {instance_id}"
                self.logger.warning(
                    "Skipping graph with duplicate instance id",
                    extra={"path": path, "instance_id": instance_id},
                )
                continue
            features[instance_id] = graph_features
            graph_refs[instance_id] = path

        if not features:
            raise NoInputsError("no graph could be parsed")

        self.logger.info(
            "Extracted features",
            extra={"graphs": len(features), "failures": len(failures)},
        )
        return FeatureRun(features=features, graph_refs=graph_refs, failures=failures)

    def write_features(self, run: FeatureRun, out: Path):
        write_features_csv(run.features, out)
        self.logger.info("Wrote feature table", extra={"path": str(out), "rows": len(run.features)})
