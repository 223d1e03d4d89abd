"""
Classification metrics.

Per-class precision, recall and F1 are computed as exact fractions from
the confusion counts and only converted to floats at the end, so that
weighted F1 equals macro F1 bit-for-bit whenever all supports are equal.
Undefined precision, recall or F1 are reported as 0.
"""

from fractions import Fraction

import numpy as np
import numpy.typing as npt
from pydantic import BaseModel, Field

from src.errors import EmptyMatrixError, LabelOutOfRangeError, LengthMismatchError


class ConfusionMatrix(BaseModel):
    """
    Args:
        counts (list[list[int]]): C x C counts; rows are true classes and
            columns predicted classes.
    """

    counts: list[list[int]]

    @property
    def n_classes(self) -> int:
        return len(self.counts)

    @property
    def total(self) -> int:
        return sum(sum(row) for row in self.counts)

    def as_array(self) -> npt.NDArray[np.int64]:
        return np.asarray(self.counts, dtype=np.int64).reshape(self.n_classes, self.n_classes)


class ClassMetrics(BaseModel):
    precision: float = Field(..., ge=0, le=1)
    recall: float = Field(..., ge=0, le=1)
    f1: float = Field(..., ge=0, le=1)
    support: int = Field(..., ge=0)


class MetricReport(BaseModel):
    """
    Metrics of one set of predictions.

    Args:
        accuracy (float): Fraction of correct predictions.
        per_class (list[ClassMetrics]): Precision, recall, F1 and support.
        macro_f1 (float): Unweighted mean of the per-class F1.
        weighted_f1 (float): Support-weighted mean of the per-class F1.
        total (int): Number of evaluated rows.
    """

    accuracy: float = Field(..., ge=0, le=1)
    per_class: list[ClassMetrics]
    macro_f1: float = Field(..., ge=0, le=1)
    weighted_f1: float = Field(..., ge=0, le=1)
    total: int = Field(..., ge=0)


def _ratio(numerator: int, denominator: int) -> Fraction:
    return Fraction(numerator, denominator) if denominator else Fraction(0)


def confusion(y_true: npt.ArrayLike, y_pred: npt.ArrayLike, n_classes: int) -> ConfusionMatrix:
    """
    Count (true, predicted) pairs.

    Raises:
        LengthMismatchError: If the label vectors differ in length.
        LabelOutOfRangeError: If a label lies outside [0, n_classes).
    """
    truth = np.asarray(y_true, dtype=np.int64).ravel()
    predicted = np.asarray(y_pred, dtype=np.int64).ravel()
    if truth.shape != predicted.shape:
        raise LengthMismatchError(
            f"{truth.size} true labels but {predicted.size} predictions"
        )
    for labels in (truth, predicted):
        if labels.size and (labels.min() < 0 or labels.max() >= n_classes):
            raise LabelOutOfRangeError(f"labels must lie in [0, {n_classes})")

    counts = np.zeros((n_classes, n_classes), dtype=np.int64)
    np.add.at(counts, (truth, predicted), 1)
    return ConfusionMatrix(counts=counts.tolist())


def _require_rows(cm: ConfusionMatrix):
    if cm.total == 0:
        raise EmptyMatrixError("confusion matrix holds no rows")


def accuracy(cm: ConfusionMatrix) -> float:
    _require_rows(cm)
    counts = cm.as_array()
    return float(Fraction(int(np.trace(counts)), cm.total))


def _class_fractions(cm: ConfusionMatrix) -> list[tuple[Fraction, Fraction, Fraction]]:
    counts = cm.as_array()
    fractions = []
    for c in range(cm.n_classes):
        tp = int(counts[c, c])
        fp = int(counts[:, c].sum()) - tp
        fn = int(counts[c, :].sum()) - tp
        precision = _ratio(tp, tp + fp)
        recall = _ratio(tp, tp + fn)
        # 2PR/(P+R) rewritten on counts; 0 when tp is 0
        f1 = _ratio(2 * tp, 2 * tp + fp + fn)
        fractions.append((precision, recall, f1))
    return fractions


def per_class_f1(cm: ConfusionMatrix) -> list[ClassMetrics]:
    """
    Precision, recall and F1 of every class.

    Raises:
        EmptyMatrixError: If the matrix holds no rows.
    """
    _require_rows(cm)
    supports = cm.as_array().sum(axis=1)
    return [
        ClassMetrics(
            precision=float(precision),
            recall=float(recall),
            f1=float(f1),
            support=int(support),
        )
        for (precision, recall, f1), support in zip(
            _class_fractions(cm), supports, strict=True
        )
    ]


def macro_f1(cm: ConfusionMatrix) -> float:
    _require_rows(cm)
    f1s = [f1 for _, _, f1 in _class_fractions(cm)]
    return float(sum(f1s, Fraction(0)) / cm.n_classes)


def weighted_f1(cm: ConfusionMatrix) -> float:
    _require_rows(cm)
    supports = cm.as_array().sum(axis=1)
    weighted = sum(
        (Fraction(int(n), cm.total) * f1 for (_, _, f1), n in zip(_class_fractions(cm), supports)),
        Fraction(0),
    )
    return float(weighted)


def metric_report(cm: ConfusionMatrix) -> MetricReport:
    """
    Every metric of one confusion matrix.

    Raises:
        EmptyMatrixError: If the matrix holds no rows.
    """
    return MetricReport(
        accuracy=accuracy(cm),
        per_class=per_class_f1(cm),
        macro_f1=macro_f1(cm),
        weighted_f1=weighted_f1(cm),
        total=cm.total,
    )


def multilabel_summary(
    label_confusions: list[ConfusionMatrix],
) -> tuple[float, float, float]:
    """
    Aggregate one binary confusion matrix per label.

    Accuracy is the mean per-label accuracy. Macro F1 is the mean of the
    positive-class F1 over the labels, weighted F1 weights them by their
    positive support, so the two coincide when the supports are equal.

    Returns:
        tuple[float, float, float]: (accuracy, macro F1, weighted F1).
    """
    if not label_confusions:
        raise EmptyMatrixError("no per-label confusion matrices")
    for cm in label_confusions:
        _require_rows(cm)

    accuracies = [Fraction(int(np.trace(cm.as_array())), cm.total) for cm in label_confusions]
    positive_f1 = [_class_fractions(cm)[1][2] for cm in label_confusions]
    supports = [int(cm.as_array()[1].sum()) for cm in label_confusions]
    labels = len(label_confusions)

    mean_accuracy = sum(accuracies, Fraction(0)) / labels
    macro = sum(positive_f1, Fraction(0)) / labels
    support_total = sum(supports)
    weighted = (
        sum((Fraction(n, support_total) * f1 for n, f1 in zip(supports, positive_f1)), Fraction(0))
        if support_total
        else Fraction(0)
    )
    return float(mean_accuracy), float(macro), float(weighted)
