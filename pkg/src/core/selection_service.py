"""
Algorithm selection service: training, evaluating and applying selectors.

This module drives both the classical selectors and the GAT-MLP, reading
datasets through the repository and persisting models as JSON documents.
"""

import json
from pathlib import Path
from typing import Any

from src.config import Settings
from src.dataset.models import DatasetVariant
from src.dataset.repository import DatasetRepository
from src.errors import DatasetIoError, SchemaMismatchError
from src.evaluation.reports import VariantReport, evaluate_variant
from src.features.extraction import extract_global
from src.gnn.gradcheck import GradientCheckResult, gradient_check
from src.gnn.params import LossMode, TrainConfig
from src.gnn.selector import GatMlpSelector, load_gat_selector, save_gat_selector
from src.gnn.training import write_training_log
from src.graph.parser import load_graph
from src.selectors.families import ModelFamily
from src.selectors.selector import ClassicalSelector, load_selector, save_selector
from src.solvers.models import SolverId
from src.utils.logger import Logger

GAT_MODEL = "gat"
TRAINING_LOG_SUFFIX = ".training_log.csv"

Selector = ClassicalSelector | GatMlpSelector


def load_model(path: Path) -> Selector:
    """
    Load either model document, telling them apart by their keys.

    Raises:
        DatasetIoError: If the file cannot be read.
        SchemaMismatchError: If the document is neither kind.
    """
    try:
        document = json.loads(path.read_text(encoding="utf-8"))
    except OSError as e:
        raise DatasetIoError(f"cannot read model {path}: {e}") from e
    except json.JSONDecodeError as e:
        raise SchemaMismatchError(f"model {path} is not JSON: {e}") from e
    if "blocks" in document:
        return load_gat_selector(path)
    if "family" in document:
        return load_selector(path)
    raise SchemaMismatchError(f"{path} is not a model document")


def variant_of(variant: DatasetVariant | None, path: Path) -> DatasetVariant:
    if variant is None:
        raise SchemaMismatchError(f"{path} is an unbuilt labeled table; run build first")
    return variant


def model_name(model: Selector) -> str:
    if isinstance(model, GatMlpSelector):
        return GAT_MODEL
    return str(model.family)


class SelectionService:
    """
    Service class for selector training and inference.
    """

    def __init__(self, repository: DatasetRepository, logger: Logger, settings: Settings):
        """
        Initialize the selection service.

        Args:
            repository (DatasetRepository): The dataset repository.
            logger (Logger): The logger instance.
            settings (Settings): The settings instance.
        """
        self.repository = repository
        self.logger = logger
        self.settings = settings

    def train(
        self,
        model: str,
        dataset_path: Path,
        out: Path,
        seed: int,
        folds: int,
        train_config: TrainConfig,
        hyperparameters: dict[str, Any] | None = None,
        loss_mode: LossMode | None = None,
    ) -> Selector:
        """
        Train a selector on a saved training dataset.

        Args:
            model (str): "dt", "rf", "knn", "svm" or "gat".
            dataset_path (Path): Training dataset; its manifest names the variant.
            out (Path): Model document path.
            seed (int): Seed of tuning and fitting.
            folds (int): Cross-validation folds of the classical grid search.
            train_config (TrainConfig): GAT-MLP configuration.
            hyperparameters (dict[str, Any] | None): Fixed classical
                hyperparameters, skipping the grid search.
            loss_mode (LossMode | None): GAT-MLP loss, derived from the variant
                when None.

        Returns:
            Selector: The trained selector.

        Raises:
            SchemaMismatchError: If the dataset has no variant.
        """
        instances, manifest = self.repository.load_dataset(dataset_path)
        variant = variant_of(manifest.variant, dataset_path)

        if model == GAT_MODEL:
            selector = GatMlpSelector.fit(
                variant,
                instances,
                train_config.model_copy(update={"seed": seed}),
                self.logger,
                loss_mode=loss_mode,
            )
            save_gat_selector(selector, out)
            write_training_log(selector.training_log, out.with_name(out.stem + TRAINING_LOG_SUFFIX))
        else:
            selector = ClassicalSelector.fit(
                ModelFamily(model),
                variant,
                instances,
                self.logger,
                hyperparameters=hyperparameters,
                folds=folds,
                seed=seed,
            )
            save_selector(selector, out)

        self.logger.info(
            "Saved model",
            extra={"model": model, "variant": str(variant), "path": str(out)},
        )
        return selector

    def evaluate(
        self,
        model_path: Path,
        test_path: Path,
        train_path: Path | None = None,
    ) -> VariantReport:
        """
        Score a saved model on a saved test dataset of the same variant.

        Args:
            model_path (Path): Model document.
            test_path (Path): Test dataset.
            train_path (Path | None): Training dataset for the majority baseline.

        Returns:
            VariantReport: The scores.
        """
        model = load_model(model_path)
        test, manifest = self.repository.load_dataset(test_path)
        train = self.repository.load_dataset(train_path)[0] if train_path else None
        report = evaluate_variant(
            model, test, variant_of(manifest.variant, test_path), model_name(model), train
        )
        self.logger.info(
            "Evaluated model",
            extra={
                "model": report.model,
                "variant": str(report.variant),
                "accuracy": report.accuracy,
                "macro_f1": report.macro_f1,
                "weighted_f1": report.weighted_f1,
            },
        )
        return report

    def predict(self, model_path: Path, graph_path: Path) -> tuple[SolverId, ...]:
        """
        Predict the winning solver(s) of a new graph.
        """
        model = load_model(model_path)
        g = load_graph(graph_path, self.settings.file_encoding)
        if isinstance(model, GatMlpSelector):
            return model.predict_graph(g)
        return model.predict_sets(extract_global(g).as_vector().reshape(1, -1))[0]

    def check_gradients(
        self,
        seeds: int,
        step: float,
        tolerance: float,
        mode: LossMode = LossMode.SOFTMAX,
    ) -> list[GradientCheckResult]:
        """
        Run the finite-difference gradient check for seeds 0..seeds-1.
        """
        results = []
        for seed in range(seeds):
            result = gradient_check(seed, mode=mode, step=step)
            results.append(result)
            log = self.logger.info if result.max_error < tolerance else self.logger.error
            log(
                "Gradient check",
                extra={"seed": seed, "max_error": result.max_error, "tolerance": tolerance},
            )
        return results
