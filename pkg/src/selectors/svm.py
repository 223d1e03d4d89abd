"""
Linear one-vs-rest SVM trained by deterministic stochastic subgradient
descent on the regularized hinge loss.
"""

from typing import Literal

import numpy as np
import numpy.typing as npt
from pydantic import BaseModel, Field

from src.errors import SingleClassError
from src.selectors.tree import validate_training_data


class SvmHyperparams(BaseModel):
    """
    Args:
        c (float): Inverse regularization strength.
        epochs (int): Passes over the training data per class.
        seed (int): Seed of the per-epoch shuffles.
    """

    c: float = Field(default=1.0, gt=0)
    epochs: int = Field(default=100, ge=1)
    seed: int = 0


class LinearSvmModel(BaseModel):
    kind: Literal["svm"] = "svm"
    weights: list[list[float]]
    bias: list[float]
    c: float
    n_classes: int

    def decision_scores(self, X: npt.ArrayLike) -> npt.NDArray[np.float64]:
        """Signed margin of every class."""
        matrix = np.asarray(X, dtype=np.float64)
        return matrix @ np.asarray(self.weights).T + np.asarray(self.bias)

    def predict(self, X: npt.ArrayLike) -> npt.NDArray[np.int64]:
        return np.argmax(self.decision_scores(X), axis=1)


def _fit_binary(
    X: npt.NDArray[np.float64],
    signs: npt.NDArray[np.float64],
    c: float,
    epochs: int,
    rng: np.random.Generator,
) -> npt.NDArray[np.float64]:
    """
    Pegasos on rows augmented with a constant 1 (the bias weight).
    """
    n = X.shape[0]
    augmented = np.hstack([X, np.ones((n, 1))])
    lam = 1.0 / (c * n)
    radius = 1.0 / np.sqrt(lam)
    w = np.zeros(augmented.shape[1])

    step = 0
    for _ in range(epochs):
        for i in rng.permutation(n):
            step += 1
            eta = 1.0 / (lam * step)
            margin = signs[i] * (augmented[i] @ w)
            w *= 1.0 - eta * lam
            if margin < 1.0:
                w += eta * signs[i] * augmented[i]
            norm = np.linalg.norm(w)
            if norm > radius:
                w *= radius / norm
    return w


def fit_svm(
    X: npt.ArrayLike,
    y: npt.ArrayLike,
    hp: SvmHyperparams | None = None,
    n_classes: int | None = None,
) -> LinearSvmModel:
    """
    Fit one hinge-loss classifier per class against the rest.

    Args:
        X (npt.ArrayLike): Feature matrix, ideally z-scored.
        y (npt.ArrayLike): Class indices.
        hp (SvmHyperparams | None): Hyperparameters.
        n_classes (int | None): Number of classes, max(y) + 1 when None.

    Returns:
        LinearSvmModel: One weight vector and bias per class.

    Raises:
        SingleClassError: If fewer than two classes are present.
    """
    hp = hp or SvmHyperparams()
    matrix, labels = validate_training_data(X, y)
    if len(np.unique(labels)) < 2:
        raise SingleClassError("SVM training needs at least two classes")
    n_classes = n_classes or int(labels.max()) + 1

    weights, bias = [], []
    for cls in range(n_classes):
        rng = np.random.default_rng(hp.seed + cls)
        signs = np.where(labels == cls, 1.0, -1.0)
        w = _fit_binary(matrix, signs, hp.c, hp.epochs, rng)
        weights.append(w[:-1].tolist())
        bias.append(float(w[-1]))
    return LinearSvmModel(weights=weights, bias=bias, c=hp.c, n_classes=n_classes)
