"""
Constant-prediction model, used as the majority-class baseline and for
training sets that hold a single class.
"""

from typing import Literal

import numpy as np
import numpy.typing as npt
from pydantic import BaseModel

from src.errors import EmptyDataError


class ConstantModel(BaseModel):
    kind: Literal["constant"] = "constant"
    label: int
    n_classes: int

    def decision_scores(self, X: npt.ArrayLike) -> npt.NDArray[np.float64]:
        scores = np.zeros((len(np.asarray(X)), self.n_classes))
        scores[:, self.label] = 1.0
        return scores

    def predict(self, X: npt.ArrayLike) -> npt.NDArray[np.int64]:
        return np.full(len(np.asarray(X)), self.label, dtype=np.int64)


def fit_majority(y: npt.ArrayLike, n_classes: int | None = None) -> ConstantModel:
    """
    Predict the most frequent training class, lowest index on ties.

    Raises:
        EmptyDataError: If y is empty.
    """
    labels = np.asarray(y, dtype=np.int64)
    if labels.size == 0:
        raise EmptyDataError("majority baseline needs at least one label")
    n_classes = n_classes or int(labels.max()) + 1
    counts = np.bincount(labels, minlength=n_classes)
    return ConstantModel(label=int(np.argmax(counts)), n_classes=n_classes)
