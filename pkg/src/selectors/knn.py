"""
k-nearest-neighbors selector.
"""

from typing import Literal

import numpy as np
import numpy.typing as npt
from pydantic import BaseModel, Field

from src.errors import KTooLargeError
from src.selectors.tree import validate_training_data


class KnnHyperparams(BaseModel):
    k: int = Field(default=5, ge=1)


class KnnModel(BaseModel):
    """
    Stored (normalized) training rows and labels.

    Distance ties go to the lower training index; vote ties go to the
    lower class index.
    """

    kind: Literal["knn"] = "knn"
    X: list[list[float]]
    y: list[int]
    k: int
    n_classes: int

    def _neighbor_labels(self, X: npt.ArrayLike) -> npt.NDArray[np.int64]:
        train = np.asarray(self.X, dtype=np.float64)
        query = np.asarray(X, dtype=np.float64)
        distances = ((query[:, None, :] - train[None, :, :]) ** 2).sum(axis=2)
        nearest = np.argsort(distances, axis=1, kind="stable")[:, : self.k]
        return np.asarray(self.y, dtype=np.int64)[nearest]

    def decision_scores(self, X: npt.ArrayLike) -> npt.NDArray[np.float64]:
        """Fraction of the k neighbors in each class."""
        labels = self._neighbor_labels(X)
        votes = np.zeros((labels.shape[0], self.n_classes))
        for i, row in enumerate(labels):
            votes[i] = np.bincount(row, minlength=self.n_classes)
        return votes / self.k

    def predict(self, X: npt.ArrayLike) -> npt.NDArray[np.int64]:
        return np.argmax(self.decision_scores(X), axis=1)


def fit_knn(
    X: npt.ArrayLike,
    y: npt.ArrayLike,
    hp: KnnHyperparams | None = None,
    n_classes: int | None = None,
) -> KnnModel:
    """
    Store the training data.

    Raises:
        KTooLargeError: If k exceeds the number of training rows.
    """
    hp = hp or KnnHyperparams()
    matrix, labels = validate_training_data(X, y)
    if hp.k > len(labels):
        raise KTooLargeError(f"k={hp.k} exceeds {len(labels)} training rows")
    return KnnModel(
        X=matrix.tolist(),
        y=labels.tolist(),
        k=hp.k,
        n_classes=n_classes or int(labels.max()) + 1,
    )


def predict_knn(model: KnnModel, query: npt.ArrayLike) -> npt.NDArray[np.int64]:
    return model.predict(np.atleast_2d(np.asarray(query, dtype=np.float64)))
