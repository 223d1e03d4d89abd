"""
Method3: one binary classifier per solver, combined into a winner set.
"""

from collections.abc import Mapping
from typing import Any

import numpy as np
import numpy.typing as npt
from pydantic import BaseModel

from src.selectors.baseline import ConstantModel
from src.selectors.families import FittedModel, ModelFamily, fit_family
from src.solvers.models import SolverId


class Method3Model(BaseModel):
    """
    Binary models keyed by solver name, in solver order.
    """

    models: dict[SolverId, FittedModel]

    def positive_scores(self, X: npt.ArrayLike) -> npt.NDArray[np.float64]:
        return np.column_stack(
            [self.models[solver].decision_scores(X)[:, 1] for solver in SolverId]
        )

    def positive_predictions(self, X: npt.ArrayLike) -> npt.NDArray[np.bool_]:
        return np.column_stack(
            [self.models[solver].predict(X) == 1 for solver in SolverId]
        )

    def predict_sets(self, X: npt.ArrayLike) -> list[tuple[SolverId, ...]]:
        return combine_binary_predictions(
            self.positive_predictions(X), self.positive_scores(X)
        )


def combine_binary_predictions(
    positives: npt.ArrayLike, scores: npt.ArrayLike
) -> list[tuple[SolverId, ...]]:
    """
    Every solver predicted positive; when none is, the single solver with
    the highest positive score (lowest index on ties).
    """
    positives = np.asarray(positives, dtype=bool)
    scores = np.asarray(scores, dtype=np.float64)
    combined = []
    for row_positive, row_scores in zip(positives, scores, strict=True):
        chosen = tuple(solver for solver in SolverId if row_positive[solver.index])
        if not chosen:
            chosen = (SolverId.from_index(int(np.argmax(row_scores))),)
        combined.append(chosen)
    return combined


def fit_method3_binary(
    X: npt.ArrayLike,
    targets: Mapping[SolverId, npt.ArrayLike],
    model_family: ModelFamily,
    hp: dict[str, Any],
) -> Method3Model:
    """
    Fit one binary model per solver on shared feature rows.

    A solver whose targets are all equal gets a constant model.

    Args:
        X (npt.ArrayLike): Shared feature matrix.
        targets (Mapping[SolverId, npt.ArrayLike]): 0/1 targets per solver.
        model_family (ModelFamily): Family of every binary model.
        hp (dict[str, Any]): Hyperparameters of every binary model.

    Returns:
        Method3Model: The four binary models.
    """
    models = {}
    for solver in SolverId:
        y = np.asarray(targets[solver], dtype=np.int64)
        classes = np.unique(y)
        if len(classes) == 1:
            models[solver] = ConstantModel(label=int(classes[0]), n_classes=2)
        else:
            models[solver] = fit_family(model_family, X, y, hp, n_classes=2)
    return Method3Model(models=models)
