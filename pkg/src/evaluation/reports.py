"""
Evaluation of selectors on test rows and the comparison reports built
from the results.
"""

import json
from collections.abc import Mapping, Sequence
from pathlib import Path
from typing import Any, Protocol

import numpy as np
import numpy.typing as npt
import pandas as pd
from pydantic import BaseModel

from src.constants import (
    FEATURE_COLUMNS,
    METHOD1_SCORING_NOTE,
    REPORT_COLUMNS,
    ZERO_DIVISION_CONVENTION,
)
from src.dataset.models import DatasetVariant, LabeledInstance, label_vector
from src.errors import DatasetIoError, EmptyMatrixError, VariantMismatchError
from src.evaluation.metrics import (
    MetricReport,
    confusion,
    metric_report,
    multilabel_summary,
)
from src.selectors.baseline import fit_majority
from src.solvers.models import SolverId

PLOT_METRICS = ("accuracy", "macro_f1", "weighted_f1")
IMPORTANCE_AVERAGE_COLUMN = "Average"


class WinnerPredictor(Protocol):
    variant: DatasetVariant

    def predict_instances(
        self, instances: list[LabeledInstance], graphs: Any = None
    ) -> list[tuple[SolverId, ...]]: ...


class LabelReport(BaseModel):
    solver: SolverId
    report: MetricReport


class VariantReport(BaseModel):
    """
    Scores of one model on one dataset variant.

    Args:
        model (str): Model name.
        variant (DatasetVariant): Dataset variant.
        accuracy (float): Accuracy; mean per-label accuracy for Method3.
        macro_f1 (float): Macro F1; mean positive-class F1 for Method3.
        weighted_f1 (float): Weighted F1; support-weighted for Method3.
        baseline_accuracy (float | None): Accuracy of the training majority.
        multiclass (MetricReport | None): Full report (Method1, Method2).
        per_label (list[LabelReport]): Binary reports (Method3).
        total (int): Evaluated rows.
        zero_division (str): Convention for undefined ratios.
        notes (list[str]): Scoring remarks.
    """

    model: str
    variant: DatasetVariant
    accuracy: float
    macro_f1: float
    weighted_f1: float
    baseline_accuracy: float | None = None
    multiclass: MetricReport | None = None
    per_label: list[LabelReport] = []
    total: int
    zero_division: str = ZERO_DIVISION_CONVENTION
    notes: list[str] = []


def _sets_to_matrix(sets: Sequence[Sequence[SolverId]]) -> npt.NDArray[np.bool_]:
    matrix = np.zeros((len(sets), len(SolverId)), dtype=bool)
    for row, solvers in enumerate(sets):
        for solver in solvers:
            matrix[row, solver.index] = True
    return matrix


def _baseline_accuracy(
    train: Sequence[LabeledInstance] | None,
    test: Sequence[LabeledInstance],
    variant: DatasetVariant,
) -> float | None:
    if not train:
        return None
    if variant != DatasetVariant.METHOD3:
        majority = fit_majority(label_vector(list(train)), len(SolverId))
        return float(np.mean(label_vector(list(test)) == majority.label))
    train_truth = _sets_to_matrix([instance.winners for instance in train])
    test_truth = _sets_to_matrix([instance.winners for instance in test])
    majority = train_truth.mean(axis=0) > 0.5
    return float(np.mean(test_truth == majority))


def evaluate_predictions(
    test: Sequence[LabeledInstance],
    predicted: Sequence[Sequence[SolverId]],
    variant: DatasetVariant,
    model_name: str,
    train: Sequence[LabeledInstance] | None = None,
) -> VariantReport:
    """
    Score predicted winner sets against the test rows.

    Method1 and Method2 are scored as 4-class problems on the first
    predicted solver; Method3 as four binary problems, one per solver.

    Raises:
        EmptyMatrixError: If there are no test rows.
    """
    if not test:
        raise EmptyMatrixError("no test rows to evaluate")
    classes = len(SolverId)
    notes = [METHOD1_SCORING_NOTE] if variant == DatasetVariant.METHOD1 else []
    baseline = _baseline_accuracy(train, test, variant)

    if variant != DatasetVariant.METHOD3:
        truth = label_vector(list(test))
        guesses = [solvers[0].index for solvers in predicted]
        report = metric_report(confusion(truth, guesses, classes))
        return VariantReport(
            model=model_name,
            variant=variant,
            accuracy=report.accuracy,
            macro_f1=report.macro_f1,
            weighted_f1=report.weighted_f1,
            baseline_accuracy=baseline,
            multiclass=report,
            total=report.total,
            notes=notes,
        )

    truth = _sets_to_matrix([instance.winners for instance in test])
    chosen = _sets_to_matrix(predicted)
    label_confusions = [confusion(truth[:, c], chosen[:, c], 2) for c in range(classes)]
    accuracy, macro, weighted = multilabel_summary(label_confusions)
    return VariantReport(
        model=model_name,
        variant=variant,
        accuracy=accuracy,
        macro_f1=macro,
        weighted_f1=weighted,
        baseline_accuracy=baseline,
        per_label=[
            LabelReport(solver=solver, report=metric_report(cm))
            for solver, cm in zip(SolverId, label_confusions, strict=True)
        ],
        total=len(test),
        notes=notes,
    )


def evaluate_variant(
    model: WinnerPredictor,
    test: Sequence[LabeledInstance],
    variant: DatasetVariant,
    model_name: str,
    train: Sequence[LabeledInstance] | None = None,
    graphs: Mapping[str, Any] | None = None,
) -> VariantReport:
    """
    Predict and score a trained selector on test rows of its own variant.

    Args:
        model (WinnerPredictor): A trained classical or GAT-MLP selector.
        test (Sequence[LabeledInstance]): Test rows.
        variant (DatasetVariant): Variant of the test rows.
        model_name (str): Name used in the report.
        train (Sequence[LabeledInstance] | None): Training rows, used for
            the majority baseline.
        graphs (Mapping[str, Any] | None): Graphs by instance id, for
            selectors that need them.

    Returns:
        VariantReport: The scores.

    Raises:
        VariantMismatchError: If the model was trained on another variant.
    """
    if model.variant != variant:
        raise VariantMismatchError(
            f"model trained on {model.variant} cannot be scored on {variant}"
        )
    predicted = model.predict_instances(list(test), graphs)
    return evaluate_predictions(test, predicted, variant, model_name, train)


def reports_frame(reports: Sequence[VariantReport]) -> pd.DataFrame:
    return pd.DataFrame(
        [
            {
                "model": report.model,
                "variant": str(report.variant),
                "accuracy": report.accuracy,
                "macro_f1": report.macro_f1,
                "weighted_f1": report.weighted_f1,
                "baseline_accuracy": report.baseline_accuracy,
            }
            for report in reports
        ],
        columns=list(REPORT_COLUMNS),
    )


def plot_data(reports: Sequence[VariantReport]) -> dict[str, Any]:
    """
    Per-model, per-variant metric triples for grouped bar charts.
    """
    series: dict[str, dict[str, list[float]]] = {}
    for report in reports:
        series.setdefault(report.model, {})[str(report.variant)] = [
            getattr(report, metric) for metric in PLOT_METRICS
        ]
    return {
        "metrics": list(PLOT_METRICS),
        "series": series,
        "zero_division": ZERO_DIVISION_CONVENTION,
        "notes": sorted({note for report in reports for note in report.notes}),
    }


def best_combination(
    reports: Sequence[VariantReport], metric: str = "macro_f1"
) -> VariantReport:
    """Report with the highest metric, then accuracy; the first one on full ties."""
    if not reports:
        raise EmptyMatrixError("no reports to compare")
    best = reports[0]
    for report in reports[1:]:
        if (getattr(report, metric), report.accuracy) > (getattr(best, metric), best.accuracy):
            best = report
    return best


def importance_matrix(
    importances: Mapping[str, npt.ArrayLike],
) -> pd.DataFrame:
    """
    Features as rows, one column per (model, variant) configuration and a
    final column averaging them.

    Args:
        importances (Mapping[str, npt.ArrayLike]): Importance vector per
            configuration name, e.g. "rf-Method2".

    Returns:
        pd.DataFrame: The matrix, indexed by feature name.
    """
    frame = pd.DataFrame(
        {name: np.asarray(vector, dtype=np.float64) for name, vector in importances.items()},
        index=list(FEATURE_COLUMNS),
    )
    frame[IMPORTANCE_AVERAGE_COLUMN] = frame.mean(axis=1) if importances else 0.0
    return frame


def _write(path: Path, write):
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        write(path)
    except OSError as e:
        raise DatasetIoError(f"cannot write {path}: {e}") from e


def write_report_csv(reports: Sequence[VariantReport], path: Path):
    _write(path, lambda p: reports_frame(reports).to_csv(p, index=False))


def write_plot_data(reports: Sequence[VariantReport], path: Path):
    _write(path, lambda p: p.write_text(json.dumps(plot_data(reports), indent=2), encoding="utf-8"))


def write_importance_csv(matrix: pd.DataFrame, path: Path):
    _write(path, lambda p: matrix.to_csv(p, index_label="feature"))


def write_frame_csv(frame: pd.DataFrame, path: Path):
    _write(path, lambda p: frame.to_csv(p, index=False))
