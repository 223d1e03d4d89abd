"""
Classical algorithm selector.

This module wraps a model family, its tuned hyperparameters, the optional
z-score normalizer and the fitted model(s) into one serializable selector
for any of the three dataset variants.
"""

from pathlib import Path
from typing import Any, Self

import numpy as np
import numpy.typing as npt
from pydantic import BaseModel

from src.constants import FEATURE_COUNT, MODEL_DOCUMENT_VERSION
from src.dataset.models import DatasetVariant, LabeledInstance, feature_matrix, label_vector
from src.dataset.variants import apply_method3
from src.errors import DatasetIoError, SchemaMismatchError, UnfitModelError
from src.features.models import ZScoreNormalizer
from src.selectors.families import FittedModel, ModelFamily, default_grid, fit_family
from src.selectors.forest import ForestModel, forest_feature_importance
from src.selectors.method3 import Method3Model, fit_method3_binary
from src.selectors.search import GridSearchResult, cross_validate_grid
from src.selectors.tree import TreeModel, tree_feature_importance
from src.solvers.models import SolverId
from src.utils.logger import Logger


def _model_importance(model: FittedModel) -> npt.NDArray[np.float64] | None:
    if isinstance(model, TreeModel):
        return tree_feature_importance(model)
    if isinstance(model, ForestModel):
        return forest_feature_importance(model)
    return None


class ClassicalSelector(BaseModel):
    """
    A fitted classical selector and everything needed to reuse it.

    Args:
        version (int): Document schema version.
        family (ModelFamily): Model family.
        variant (DatasetVariant): Dataset variant it was trained on.
        hyperparameters (dict[str, Any]): Hyperparameters of the model(s).
        normalizer (ZScoreNormalizer | None): Feature scaling for kNN and SVM.
        model (FittedModel | None): Multiclass model (Method1, Method2).
        method3 (Method3Model | None): Binary models (Method3).
        search (list[GridSearchResult]): Grid searches run during fitting.
    """

    version: int = MODEL_DOCUMENT_VERSION
    family: ModelFamily
    variant: DatasetVariant
    hyperparameters: dict[str, Any]
    normalizer: ZScoreNormalizer | None = None
    model: FittedModel | None = None
    method3: Method3Model | None = None
    search: list[GridSearchResult] = []

    @classmethod
    def fit(
        cls,
        family: ModelFamily,
        variant: DatasetVariant,
        instances: list[LabeledInstance],
        logger: Logger,
        hyperparameters: dict[str, Any] | None = None,
        folds: int = 5,
        seed: int = 0,
    ) -> Self:
        """
        Tune (unless hyperparameters are given) and fit a selector.

        Hyperparameters are tuned by stratified cross-validation on the
        training rows; with fewer rows than folds the first grid entry is
        used. For Method3 one configuration is shared by the four binary
        models and scored by its mean accuracy over them.

        Args:
            family (ModelFamily): Model family.
            variant (DatasetVariant): Variant the instances belong to.
            instances (list[LabeledInstance]): Training rows.
            logger (Logger): The logger.
            hyperparameters (dict[str, Any] | None): Fixed hyperparameters.
            folds (int): Cross-validation folds.
            seed (int): Seed of folds and models.

        Returns:
            ClassicalSelector: The fitted selector.
        """
        X = feature_matrix(instances)
        normalizer = ZScoreNormalizer.fit(X) if family.needs_scaling else None
        X_fit = normalizer.transform(X) if normalizer else X

        if variant == DatasetVariant.METHOD3:
            targets = {
                solver: dataset.target_vector()
                for solver, dataset in apply_method3(instances).items()
            }
            searches = []
            if hyperparameters is None:
                hyperparameters, searches = cls._tune_shared(
                    family, X, targets, folds, seed, logger
                )
            method3 = fit_method3_binary(X_fit, targets, family, hyperparameters)
            selector = cls(
                family=family,
                variant=variant,
                hyperparameters=hyperparameters,
                normalizer=normalizer,
                method3=method3,
                search=searches,
            )
        else:
            y = label_vector(instances)
            searches = []
            if hyperparameters is None:
                if len(y) >= folds:
                    result = cross_validate_grid(
                        X, y, family, folds=folds, seed=seed,
                        n_classes=len(SolverId), logger=logger,
                    )
                    hyperparameters, searches = result.best_params, [result]
                else:
                    hyperparameters = default_grid(family, seed)[0]
            selector = cls(
                family=family,
                variant=variant,
                hyperparameters=hyperparameters,
                normalizer=normalizer,
                model=fit_family(family, X_fit, y, hyperparameters, len(SolverId)),
                search=searches,
            )

        logger.info(
            "Fitted classical selector",
            extra={
                "family": str(family),
                "variant": str(variant),
                "rows": len(instances),
                "hyperparameters": hyperparameters,
            },
        )
        return selector

    @staticmethod
    def _tune_shared(
        family: ModelFamily,
        X: npt.NDArray[np.float64],
        targets: dict[SolverId, npt.NDArray[np.int64]],
        folds: int,
        seed: int,
        logger: Logger,
    ) -> tuple[dict[str, Any], list[GridSearchResult]]:
        grid = default_grid(family, seed)
        if len(X) < folds:
            return grid[0], []

        results = [
            cross_validate_grid(
                X, targets[solver], family, grid, folds, seed, n_classes=2, logger=logger
            )
            for solver in SolverId
        ]
        mean_scores = np.mean(
            [[score.mean_accuracy for score in result.scores] for result in results],
            axis=0,
        )
        # argmax keeps the first declared configuration on ties
        return grid[int(np.argmax(mean_scores))], results

    def _prepare(self, X: npt.ArrayLike) -> npt.NDArray[np.float64]:
        matrix = np.asarray(X, dtype=np.float64)
        return self.normalizer.transform(matrix) if self.normalizer else matrix

    def predict_sets(self, X: npt.ArrayLike) -> list[tuple[SolverId, ...]]:
        """
        Predicted winner set per row; a single solver except under Method3.

        Raises:
            UnfitModelError: If the selector holds no model.
        """
        matrix = self._prepare(X)
        if self.method3 is not None:
            return self.method3.predict_sets(matrix)
        if self.model is None:
            raise UnfitModelError("selector holds no fitted model")
        return [(SolverId.from_index(int(i)),) for i in self.model.predict(matrix)]

    def predict_instances(
        self, instances: list[LabeledInstance], graphs: Any = None
    ) -> list[tuple[SolverId, ...]]:
        """Predicted winner sets of labeled rows; graphs are not needed."""
        return self.predict_sets(feature_matrix(instances))

    def predict_labels(self, X: npt.ArrayLike) -> npt.NDArray[np.int64]:
        if self.model is None:
            raise UnfitModelError("selector holds no multiclass model")
        return self.model.predict(self._prepare(X))

    def binary_predictions(self, X: npt.ArrayLike) -> npt.NDArray[np.bool_]:
        if self.method3 is None:
            raise UnfitModelError("selector holds no binary models")
        return self.method3.positive_predictions(self._prepare(X))

    def feature_importance(self) -> npt.NDArray[np.float64] | None:
        """
        Gini importance of tree-based selectors, None for kNN and SVM.

        Under Method3 the importances of the four binary models are averaged.
        """
        if self.family not in (ModelFamily.DT, ModelFamily.RF):
            return None
        if self.model is not None:
            return _model_importance(self.model)
        if self.method3 is None:
            return None
        # constant binary models (single-class targets) carry no importance
        per_solver = [_model_importance(m) for m in self.method3.models.values()]
        informative = [imp for imp in per_solver if imp is not None and imp.sum() > 0]
        if not informative:
            return np.zeros(FEATURE_COUNT)
        return np.mean(informative, axis=0)


def save_selector(selector: ClassicalSelector, path: Path):
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(selector.model_dump_json(indent=2), encoding="utf-8")
    except OSError as e:
        raise DatasetIoError(f"cannot write model {path}: {e}") from e


def load_selector(path: Path) -> ClassicalSelector:
    """
    Raises:
        DatasetIoError: If the file cannot be read.
        SchemaMismatchError: If the document has another schema version.
    """
    try:
        document = path.read_text(encoding="utf-8")
    except OSError as e:
        raise DatasetIoError(f"cannot read model {path}: {e}") from e
    selector = ClassicalSelector.model_validate_json(document)
    if selector.version != MODEL_DOCUMENT_VERSION:
        raise SchemaMismatchError(
            f"model document version {selector.version}, expected {MODEL_DOCUMENT_VERSION}"
        )
    return selector
