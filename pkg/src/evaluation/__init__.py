from src.evaluation.metrics import (
    ClassMetrics,
    ConfusionMatrix,
    MetricReport,
    accuracy,
    confusion,
    macro_f1,
    metric_report,
    multilabel_summary,
    per_class_f1,
    weighted_f1,
)
from src.evaluation.reports import (
    VariantReport,
    best_combination,
    evaluate_predictions,
    evaluate_variant,
    importance_matrix,
    plot_data,
    reports_frame,
    write_importance_csv,
    write_plot_data,
    write_report_csv,
)

__all__ = [
    "ClassMetrics",
    "ConfusionMatrix",
    "MetricReport",
    "VariantReport",
    "accuracy",
    "best_combination",
    "confusion",
    "evaluate_predictions",
    "evaluate_variant",
    "importance_matrix",
    "macro_f1",
    "metric_report",
    "multilabel_summary",
    "per_class_f1",
    "plot_data",
    "reports_frame",
    "weighted_f1",
    "write_importance_csv",
    "write_plot_data",
    "write_report_csv",
]
