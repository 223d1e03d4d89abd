"""
Feature table I/O: one row per instance, fixed column order.
"""

from collections.abc import Mapping
from pathlib import Path

import pandas as pd

from src.constants import FEATURE_COLUMNS, INSTANCE_COLUMN
from src.errors import DatasetIoError, SchemaMismatchError
from src.features.models import GlobalFeatures

R_DEGENERATE_COLUMN = "r_degenerate"


def features_frame(features: Mapping[str, GlobalFeatures]) -> pd.DataFrame:
    """
    Build the feature table, rows sorted by instance id.
    """
    columns = [INSTANCE_COLUMN, *FEATURE_COLUMNS, R_DEGENERATE_COLUMN]
    rows = [
        {
            INSTANCE_COLUMN: instance_id,
            **features[instance_id].model_dump(),
        }
        for instance_id in sorted(features)
    ]
    return pd.DataFrame(rows, columns=columns)


def write_features_csv(features: Mapping[str, GlobalFeatures], path: Path) -> None:
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        features_frame(features).to_csv(path, index=False)
    except OSError as e:
        raise DatasetIoError(f"cannot write feature table {path}: {e}") from e


def read_features_csv(path: Path) -> dict[str, GlobalFeatures]:
    """
    Read a feature table written by write_features_csv.

    Raises:
        DatasetIoError: If the file cannot be read.
        SchemaMismatchError: If a feature column is missing.
    """
    try:
        frame = pd.read_csv(
            path, dtype={INSTANCE_COLUMN: str}, float_precision="round_trip"
        )
    except OSError as e:
        raise DatasetIoError(f"cannot read feature table {path}: {e}") from e

    missing = [c for c in (INSTANCE_COLUMN, *FEATURE_COLUMNS) if c not in frame.columns]
    if missing:
        raise SchemaMismatchError(f"feature table {path} lacks columns {missing}")

    features = {}
    for row in frame.to_dict(orient="records"):
        degenerate = bool(row.get(R_DEGENERATE_COLUMN, False))
        features[row[INSTANCE_COLUMN]] = GlobalFeatures.from_vector(
            [row[c] for c in FEATURE_COLUMNS], r_degenerate=degenerate
        )
    return features
