"""
Random forest of bootstrap-sampled CART trees.
"""

import math
from typing import Literal

import numpy as np
import numpy.typing as npt
from pydantic import BaseModel, Field

from src.constants import FEATURE_COUNT
from src.errors import UnfitModelError
from src.selectors.tree import (
    TreeHyperparams,
    TreeModel,
    fit_tree,
    tree_feature_importance,
    validate_training_data,
)

DEFAULT_MAX_FEATURES = round(math.sqrt(FEATURE_COUNT))


class ForestHyperparams(BaseModel):
    """
    Args:
        n_trees (int): Number of trees.
        max_depth (int | None): Maximum depth of every tree.
        min_samples_leaf (int): Minimum rows on each side of a split.
        max_features (int | None): Features drawn per split, all when None.
        bootstrap (bool): Sample rows with replacement for every tree.
        seed (int): Seed of the tree seeds.
    """

    n_trees: int = Field(default=100, ge=1)
    max_depth: int | None = Field(default=None, ge=0)
    min_samples_leaf: int = Field(default=1, ge=1)
    max_features: int | None = Field(default=DEFAULT_MAX_FEATURES, ge=1)
    bootstrap: bool = True
    seed: int = 0


class ForestModel(BaseModel):
    kind: Literal["forest"] = "forest"
    trees: list[TreeModel]
    tree_seeds: list[int]
    n_classes: int
    hyperparams: ForestHyperparams

    def decision_scores(self, X: npt.ArrayLike) -> npt.NDArray[np.float64]:
        """Fraction of trees voting for each class."""
        if not self.trees:
            raise UnfitModelError("forest has no trees")
        matrix = np.asarray(X, dtype=np.float64)
        votes = np.zeros((matrix.shape[0], self.n_classes))
        for tree in self.trees:
            votes[np.arange(matrix.shape[0]), tree.predict(matrix)] += 1
        return votes / len(self.trees)

    def predict(self, X: npt.ArrayLike) -> npt.NDArray[np.int64]:
        # argmax keeps the lowest class index on tied votes
        return np.argmax(self.decision_scores(X), axis=1)


def fit_forest(
    X: npt.ArrayLike,
    y: npt.ArrayLike,
    hp: ForestHyperparams | None = None,
    n_classes: int | None = None,
) -> ForestModel:
    """
    Fit hp.n_trees trees, each on its own bootstrap sample and seed.

    Args:
        X (npt.ArrayLike): Feature matrix.
        y (npt.ArrayLike): Class indices.
        hp (ForestHyperparams | None): Hyperparameters.
        n_classes (int | None): Number of classes, max(y) + 1 when None.

    Returns:
        ForestModel: The fitted forest.

    Raises:
        EmptyDataError: If there is no training data.
        NonFiniteFeatureError: If a feature is not finite.
    """
    hp = hp or ForestHyperparams()
    matrix, labels = validate_training_data(X, y)
    n_classes = n_classes or int(labels.max()) + 1
    n = len(labels)

    tree_seeds = (
        np.random.default_rng(hp.seed).integers(2**31 - 1, size=hp.n_trees).tolist()
    )
    tree_hp = TreeHyperparams(
        max_depth=hp.max_depth,
        min_samples_leaf=hp.min_samples_leaf,
        max_features=hp.max_features,
    )

    trees = []
    for tree_seed in tree_seeds:
        rng = np.random.default_rng(tree_seed)
        rows = rng.integers(n, size=n) if hp.bootstrap else np.arange(n)
        trees.append(
            fit_tree(
                matrix[rows],
                labels[rows],
                tree_hp.model_copy(update={"seed": tree_seed}),
                n_classes=n_classes,
                rng=rng,
            )
        )
    return ForestModel(
        trees=trees, tree_seeds=tree_seeds, n_classes=n_classes, hyperparams=hp
    )


def forest_feature_importance(m: ForestModel) -> npt.NDArray[np.float64]:
    """
    Mean of the per-tree normalized Gini importances.

    Trees without any split are left out of the mean, so the result sums
    to 1 whenever at least one tree splits and is all zeros otherwise.

    Raises:
        UnfitModelError: If the forest has no trees.
    """
    if not m.trees:
        raise UnfitModelError("forest has no trees")
    per_tree = [tree_feature_importance(tree) for tree in m.trees]
    splitting = [importance for importance in per_tree if importance.sum() > 0]
    if not splitting:
        return np.zeros(m.trees[0].n_features)
    return np.mean(splitting, axis=0)
