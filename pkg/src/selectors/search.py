"""
Grid search with stratified k-fold cross-validation.
"""

from typing import Any

import numpy as np
import numpy.typing as npt
from pydantic import BaseModel

from src.errors import KTooLargeError, TooFewInstancesError
from src.features.models import ZScoreNormalizer
from src.selectors.baseline import ConstantModel
from src.selectors.families import ModelFamily, default_grid, fit_family
from src.selectors.tree import validate_training_data
from src.utils.logger import Logger


class ConfigScore(BaseModel):
    params: dict[str, Any]
    mean_accuracy: float
    fold_accuracies: list[float]


class GridSearchResult(BaseModel):
    """
    Args:
        best_params (dict[str, Any]): Configuration with the highest mean
            accuracy, the first declared one on ties.
        scores (list[ConfigScore]): Every configuration in grid order.
        seed (int): Fold assignment seed.
        fold_assignment (list[int]): Fold index of every row.
    """

    best_params: dict[str, Any]
    scores: list[ConfigScore]
    seed: int
    fold_assignment: list[int]


def stratified_folds(y: npt.ArrayLike, folds: int, seed: int) -> npt.NDArray[np.int64]:
    """
    Assign rows to folds round-robin after a seeded shuffle grouped by class.

    Fold sizes differ by at most one, and so do the per-class counts.
    """
    labels = np.asarray(y, dtype=np.int64)
    permutation = np.random.default_rng(seed).permutation(len(labels))
    order = permutation[np.argsort(labels[permutation], kind="stable")]
    assignment = np.empty(len(labels), dtype=np.int64)
    assignment[order] = np.arange(len(labels)) % folds
    return assignment


def scale_pair(
    train: npt.NDArray[np.float64], test: npt.NDArray[np.float64]
) -> tuple[npt.NDArray[np.float64], npt.NDArray[np.float64]]:
    if len(train) < 2:
        return train, test
    normalizer = ZScoreNormalizer.fit(train)
    return normalizer.transform(train), normalizer.transform(test)


def fold_accuracy(
    family: ModelFamily,
    params: dict[str, Any],
    X_train: npt.NDArray[np.float64],
    y_train: npt.NDArray[np.int64],
    X_test: npt.NDArray[np.float64],
    y_test: npt.NDArray[np.int64],
    n_classes: int,
) -> float:
    if family.needs_scaling:
        X_train, X_test = scale_pair(X_train, X_test)

    classes = np.unique(y_train)
    if len(classes) == 1:
        model = ConstantModel(label=int(classes[0]), n_classes=n_classes)
    else:
        try:
            model = fit_family(family, X_train, y_train, params, n_classes)
        except KTooLargeError:
            return 0.0
    return float(np.mean(model.predict(X_test) == y_test))


def cross_validate_grid(
    X: npt.ArrayLike,
    y: npt.ArrayLike,
    model_family: ModelFamily,
    grid: list[dict[str, Any]] | None = None,
    folds: int = 5,
    seed: int = 0,
    n_classes: int | None = None,
    logger: Logger | None = None,
) -> GridSearchResult:
    """
    Score every configuration by mean accuracy over stratified folds.

    A fold whose training part holds a single class is scored with a
    constant predictor; a kNN configuration whose k exceeds the training
    fold scores 0 on that fold.

    Args:
        X (npt.ArrayLike): Feature matrix (raw; scaling happens per fold).
        y (npt.ArrayLike): Class indices.
        model_family (ModelFamily): Family to tune.
        grid (list[dict[str, Any]] | None): Configurations, the family's
            default grid when None.
        folds (int): Number of folds.
        seed (int): Fold assignment seed.
        n_classes (int | None): Number of classes, max(y) + 1 when None.
        logger (Logger | None): Logger for per-configuration scores.

    Returns:
        GridSearchResult: Best configuration and all scores.

    Raises:
        TooFewInstancesError: If there are fewer rows than folds.
    """
    matrix, labels = validate_training_data(X, y)
    if len(labels) < folds:
        raise TooFewInstancesError(f"{len(labels)} rows cannot fill {folds} folds")

    grid = grid or default_grid(model_family, seed)
    n_classes = n_classes or int(labels.max()) + 1
    assignment = stratified_folds(labels, folds, seed)

    scores = []
    for params in grid:
        accuracies = []
        for fold in range(folds):
            test = assignment == fold
            accuracies.append(
                fold_accuracy(
                    model_family,
                    params,
                    matrix[~test],
                    labels[~test],
                    matrix[test],
                    labels[test],
                    n_classes,
                )
            )
        score = ConfigScore(
            params=params,
            mean_accuracy=float(np.mean(accuracies)),
            fold_accuracies=accuracies,
        )
        scores.append(score)
        if logger:
            logger.debug(
                "Scored configuration",
                extra={"family": str(model_family), **score.model_dump()},
            )

    best = scores[0]
    for score in scores[1:]:
        if score.mean_accuracy > best.mean_accuracy:
            best = score

    return GridSearchResult(
        best_params=best.params,
        scores=scores,
        seed=seed,
        fold_assignment=assignment.tolist(),
    )
