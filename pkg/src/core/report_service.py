"""
Comparison reports across models and dataset variants.
"""

from pathlib import Path

import pandas as pd
from pydantic import ValidationError

from src.config import Settings
from src.dataset.repository import DatasetRepository
from src.errors import DatasetIoError, SchemaMismatchError
from src.evaluation.reports import (
    VariantReport,
    best_combination,
    importance_matrix,
    write_frame_csv,
    write_importance_csv,
    write_plot_data,
    write_report_csv,
)
from src.gnn.ablation import AblationRow, run_ablation
from src.gnn.params import TrainConfig
from src.selectors.selector import load_selector
from src.utils.logger import Logger

COMPARISON_FILE = "comparison.csv"
PLOT_DATA_FILE = "plot_data.json"
IMPORTANCE_FILE = "feature_importance.csv"
ABLATION_FILE = "ablation.csv"


def read_report(path: Path) -> VariantReport:
    try:
        return VariantReport.model_validate_json(path.read_text(encoding="utf-8"))
    except OSError as e:
        raise DatasetIoError(f"cannot read report {path}: {e}") from e
    except ValidationError as e:
        raise SchemaMismatchError(f"{path} is not an evaluation report: {e}") from e


def write_report(report: VariantReport, path: Path):
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(report.model_dump_json(indent=2), encoding="utf-8")
    except OSError as e:
        raise DatasetIoError(f"cannot write report {path}: {e}") from e


class ReportService:
    """
    Service class for the comparison tables.
    """

    def __init__(self, repository: DatasetRepository, logger: Logger, settings: Settings):
        """
        Initialize the report service.

        Args:
            repository (DatasetRepository): The dataset repository.
            logger (Logger): The logger instance.
            settings (Settings): The settings instance.
        """
        self.repository = repository
        self.logger = logger
        self.settings = settings

    def compare(self, report_paths: list[Path], out_dir: Path) -> VariantReport:
        """
        Collect evaluation reports into one comparison table and the
        grouped-bar plot data, and name the best model/variant pair.

        Args:
            report_paths (list[Path]): Evaluation report documents.
            out_dir (Path): Output directory.

        Returns:
            VariantReport: The best combination by macro F1.
        """
        reports = [read_report(path) for path in report_paths]
        write_report_csv(reports, out_dir / COMPARISON_FILE)
        write_plot_data(reports, out_dir / PLOT_DATA_FILE)
        best = best_combination(reports)
        self.logger.info(
            "Best combination",
            extra={
                "model": best.model,
                "variant": str(best.variant),
                "macro_f1": best.macro_f1,
                "reports": len(reports),
            },
        )
        return best

    def importance(self, model_paths: list[Path], out_dir: Path) -> pd.DataFrame:
        """
        Feature importance of the tree-based models, one column per model
        file plus the average. Models without importances are skipped.
        """
        importances = {}
        for path in model_paths:
            selector = load_selector(path)
            vector = selector.feature_importance()
            if vector is None:
                self.logger.warning(
                    "Model has no feature importance",
                    extra={"path": str(path), "family": str(selector.family)},
                )
                continue
            importances[f"{selector.family}-{selector.variant}"] = vector
        matrix = importance_matrix(importances)
        write_importance_csv(matrix, out_dir / IMPORTANCE_FILE)
        self.logger.info("Wrote importance matrix", extra={"models": len(importances)})
        return matrix

    def ablation(
        self, train_path: Path, test_path: Path, cfg: TrainConfig, out_dir: Path
    ) -> list[AblationRow]:
        train, manifest = self.repository.load_dataset(train_path)
        test, _ = self.repository.load_dataset(test_path)
        if manifest.variant is None:
            raise SchemaMismatchError(f"{train_path} is an unbuilt labeled table")
        rows = run_ablation(train, test, cfg, self.logger, dataset_variant=manifest.variant)
        write_frame_csv(
            pd.DataFrame([row.model_dump(mode="json") for row in rows]),
            out_dir / ABLATION_FILE,
        )
        return rows
