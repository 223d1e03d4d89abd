"""
Registry of the classical model families, their hyperparameter models
and default search grids.
"""

import itertools
from collections.abc import Callable
from enum import StrEnum
from typing import Annotated, Any

from pydantic import BaseModel, Field

from src.selectors.baseline import ConstantModel
from src.selectors.forest import ForestHyperparams, ForestModel, fit_forest
from src.selectors.knn import KnnHyperparams, KnnModel, fit_knn
from src.selectors.svm import LinearSvmModel, SvmHyperparams, fit_svm
from src.selectors.tree import TreeHyperparams, TreeModel, fit_tree

FittedModel = Annotated[
    TreeModel | ForestModel | KnnModel | LinearSvmModel | ConstantModel,
    Field(discriminator="kind"),
]


class ModelFamily(StrEnum):
    DT = "dt"
    RF = "rf"
    KNN = "knn"
    SVM = "svm"

    @property
    def needs_scaling(self) -> bool:
        """Distance and margin based families train on z-scored features."""
        return self in (ModelFamily.KNN, ModelFamily.SVM)


HYPERPARAMS: dict[ModelFamily, type[BaseModel]] = {
    ModelFamily.DT: TreeHyperparams,
    ModelFamily.RF: ForestHyperparams,
    ModelFamily.KNN: KnnHyperparams,
    ModelFamily.SVM: SvmHyperparams,
}

FITTERS: dict[ModelFamily, Callable[..., Any]] = {
    ModelFamily.DT: fit_tree,
    ModelFamily.RF: fit_forest,
    ModelFamily.KNN: fit_knn,
    ModelFamily.SVM: fit_svm,
}

_GRID_AXES: dict[ModelFamily, dict[str, list]] = {
    ModelFamily.DT: {"max_depth": [3, 5, 8, None], "min_samples_leaf": [1, 3, 5]},
    ModelFamily.RF: {"n_trees": [50, 100, 200]},
    ModelFamily.KNN: {"k": [1, 3, 5, 7]},
    ModelFamily.SVM: {"c": [0.1, 1.0, 10.0]},
}


def default_grid(family: ModelFamily, seed: int = 0) -> list[dict[str, Any]]:
    """
    Every combination of the family's grid axes, in declaration order.
    """
    axes = _GRID_AXES[family]
    grid = [dict(zip(axes, values)) for values in itertools.product(*axes.values())]
    if "seed" in HYPERPARAMS[family].model_fields:
        for params in grid:
            params["seed"] = seed
    return grid


def fit_family(
    family: ModelFamily, X, y, params: dict[str, Any], n_classes: int
) -> FittedModel:
    hp = HYPERPARAMS[family].model_validate(params)
    return FITTERS[family](X, y, hp, n_classes=n_classes)
