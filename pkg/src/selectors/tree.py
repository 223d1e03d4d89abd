"""
CART decision tree on Gini impurity.

The tree is stored as a flat list of nodes (children referenced by index)
so a fitted model serializes to JSON as-is.
"""

from typing import Literal

import numpy as np
import numpy.typing as npt
from pydantic import BaseModel, Field

from src.errors import EmptyDataError, NonFiniteFeatureError, UnfitModelError

MIN_GINI_DECREASE = 1e-12


class TreeHyperparams(BaseModel):
    """
    Args:
        max_depth (int | None): Maximum depth, unlimited when None.
        min_samples_leaf (int): Minimum rows on each side of a split.
        max_features (int | None): Features drawn per split, all when None.
        seed (int): Seed of the per-split feature draw.
    """

    max_depth: int | None = Field(default=None, ge=0)
    min_samples_leaf: int = Field(default=1, ge=1)
    max_features: int | None = Field(default=None, ge=1)
    seed: int = 0


class TreeNode(BaseModel):
    feature: int = -1
    threshold: float = 0.0
    left: int = -1
    right: int = -1
    counts: list[int]
    impurity_decrease: float = 0.0

    @property
    def is_leaf(self) -> bool:
        return self.feature < 0


class TreeModel(BaseModel):
    """
    A fitted decision tree. Rows with x[feature] <= threshold go left.
    """

    kind: Literal["tree"] = "tree"
    nodes: list[TreeNode]
    n_classes: int
    n_features: int
    hyperparams: TreeHyperparams

    def _leaf(self, row: npt.NDArray[np.float64]) -> TreeNode:
        node = self.nodes[0]
        while not node.is_leaf:
            node = self.nodes[node.left if row[node.feature] <= node.threshold else node.right]
        return node

    def decision_scores(self, X: npt.ArrayLike) -> npt.NDArray[np.float64]:
        """Class distribution of the leaf each row lands in."""
        if not self.nodes:
            raise UnfitModelError("tree has no nodes")
        matrix = np.asarray(X, dtype=np.float64)
        scores = np.zeros((matrix.shape[0], self.n_classes))
        for i, row in enumerate(matrix):
            counts = np.asarray(self._leaf(row).counts, dtype=np.float64)
            scores[i] = counts / counts.sum()
        return scores

    def predict(self, X: npt.ArrayLike) -> npt.NDArray[np.int64]:
        return np.argmax(self.decision_scores(X), axis=1)


def gini(counts: npt.ArrayLike) -> float:
    """1 - sum of squared class proportions; 0 for an empty node."""
    counts = np.asarray(counts, dtype=np.float64)
    total = counts.sum()
    if total == 0:
        return 0.0
    proportions = counts / total
    return float(1.0 - np.sum(proportions**2))


def validate_training_data(
    X: npt.ArrayLike, y: npt.ArrayLike
) -> tuple[npt.NDArray[np.float64], npt.NDArray[np.int64]]:
    """
    Raises:
        EmptyDataError: If there are no rows or X and y disagree in length.
        NonFiniteFeatureError: If X holds NaN or infinity.
    """
    matrix = np.asarray(X, dtype=np.float64)
    labels = np.asarray(y, dtype=np.int64)
    if matrix.ndim != 2 or matrix.shape[0] == 0:
        raise EmptyDataError("training data has no rows")
    if matrix.shape[0] != labels.shape[0]:
        raise EmptyDataError(
            f"{matrix.shape[0]} feature rows but {labels.shape[0]} labels"
        )
    if not np.all(np.isfinite(matrix)):
        raise NonFiniteFeatureError("training features must be finite")
    return matrix, labels


def _best_split(
    X: npt.NDArray[np.float64],
    y: npt.NDArray[np.int64],
    n_classes: int,
    features: npt.NDArray[np.int64],
    min_samples_leaf: int,
) -> tuple[int, float, float] | None:
    """
    Exhaustive search over midpoints between consecutive distinct values.

    Returns:
        tuple[int, float, float] | None: (feature, threshold, weighted
        child Gini) of the best split, ties going to the lower feature
        index then the lower threshold.
    """
    n = len(y)
    one_hot = np.eye(n_classes)[y]
    total = one_hot.sum(axis=0)
    best = None

    for feature in features:
        order = np.argsort(X[:, feature], kind="stable")
        values = X[order, feature]
        left_counts = np.cumsum(one_hot[order], axis=0)[:-1]
        n_left = np.arange(1, n, dtype=np.float64)
        n_right = n - n_left

        valid = values[1:] > values[:-1]
        valid &= (n_left >= min_samples_leaf) & (n_right >= min_samples_leaf)
        if not valid.any():
            continue

        right_counts = total - left_counts
        gini_left = 1.0 - np.sum((left_counts / n_left[:, None]) ** 2, axis=1)
        gini_right = 1.0 - np.sum((right_counts / n_right[:, None]) ** 2, axis=1)
        weighted = (n_left * gini_left + n_right * gini_right) / n

        for position in np.flatnonzero(valid):
            if best is None or weighted[position] < best[2]:
                threshold = (values[position] + values[position + 1]) / 2
                if threshold >= values[position + 1]:  # adjacent floats
                    threshold = values[position]
                best = (int(feature), float(threshold), float(weighted[position]))
    return best


def fit_tree(
    X: npt.ArrayLike,
    y: npt.ArrayLike,
    hp: TreeHyperparams | None = None,
    n_classes: int | None = None,
    rng: np.random.Generator | None = None,
) -> TreeModel:
    """
    Grow a CART tree greedily on Gini impurity.

    Args:
        X (npt.ArrayLike): Feature matrix.
        y (npt.ArrayLike): Class indices.
        hp (TreeHyperparams | None): Hyperparameters.
        n_classes (int | None): Number of classes, max(y) + 1 when None.
        rng (np.random.Generator | None): Feature-draw generator, seeded
            from hp.seed when None.

    Returns:
        TreeModel: The fitted tree.

    Raises:
        EmptyDataError: If there is no training data.
        NonFiniteFeatureError: If a feature is not finite.
    """
    hp = hp or TreeHyperparams()
    matrix, labels = validate_training_data(X, y)
    n_classes = n_classes or int(labels.max()) + 1
    n_features = matrix.shape[1]
    rng = rng or np.random.default_rng(hp.seed)
    nodes: list[TreeNode] = []

    def grow(indices: npt.NDArray[np.int64], depth: int) -> int:
        counts = np.bincount(labels[indices], minlength=n_classes)
        node_index = len(nodes)
        nodes.append(TreeNode(counts=counts.tolist()))

        node_gini = gini(counts)
        if node_gini == 0.0 or (hp.max_depth is not None and depth >= hp.max_depth):
            return node_index
        if len(indices) < 2 * hp.min_samples_leaf:
            return node_index

        if hp.max_features is None or hp.max_features >= n_features:
            features = np.arange(n_features)
        else:
            features = np.sort(rng.choice(n_features, hp.max_features, replace=False))

        split = _best_split(
            matrix[indices], labels[indices], n_classes, features, hp.min_samples_leaf
        )
        if split is None or node_gini - split[2] <= MIN_GINI_DECREASE:
            return node_index

        feature, threshold, child_gini = split
        goes_left = matrix[indices, feature] <= threshold
        left = grow(indices[goes_left], depth + 1)
        right = grow(indices[~goes_left], depth + 1)
        nodes[node_index] = TreeNode(
            feature=feature,
            threshold=threshold,
            left=left,
            right=right,
            counts=counts.tolist(),
            impurity_decrease=len(indices) * (node_gini - child_gini),
        )
        return node_index

    grow(np.arange(len(labels)), 0)
    return TreeModel(
        nodes=nodes, n_classes=n_classes, n_features=n_features, hyperparams=hp
    )


def tree_feature_importance(model: TreeModel) -> npt.NDArray[np.float64]:
    """
    Total weighted Gini decrease per feature, normalized to sum 1.

    All zeros when the tree has no split.

    Raises:
        UnfitModelError: If the tree has no nodes.
    """
    if not model.nodes:
        raise UnfitModelError("tree has no nodes")
    importance = np.zeros(model.n_features)
    for node in model.nodes:
        if not node.is_leaf:
            importance[node.feature] += node.impurity_decrease
    total = importance.sum()
    return importance / total if total > 0 else importance
