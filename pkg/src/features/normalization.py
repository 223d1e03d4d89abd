"""
Fit-and-apply helpers for the two normalizers.
"""

from collections.abc import Sequence

import numpy as np
import numpy.typing as npt

from src.errors import TooFewRowsError
from src.features.models import MinMaxNormalizer, ZScoreNormalizer


def minmax_fit_apply(
    m: npt.ArrayLike,
) -> tuple[MinMaxNormalizer, npt.NDArray[np.float64]]:
    normalizer = MinMaxNormalizer.fit(m)
    return normalizer, normalizer.transform(m)


def zscore_fit_apply(
    m: npt.ArrayLike,
) -> tuple[ZScoreNormalizer, npt.NDArray[np.float64]]:
    """
    Fit a z-score normalizer on m and return it with the scaled matrix.

    Raises:
        TooFewRowsError: If m has fewer than two rows.
    """
    normalizer = ZScoreNormalizer.fit(m)
    return normalizer, normalizer.transform(m)


def fit_node_normalizer(
    node_matrices: Sequence[npt.ArrayLike],
) -> MinMaxNormalizer:
    """
    Fit one min-max normalizer over the stacked node rows of many graphs.

    Args:
        node_matrices (Sequence[npt.ArrayLike]): One (n_i x 2) matrix per graph.

    Returns:
        MinMaxNormalizer: The normalizer shared by every graph.
    """
    if not node_matrices:
        raise TooFewRowsError("no node feature matrices to fit on")
    stacked = np.vstack([np.asarray(m, dtype=np.float64) for m in node_matrices])
    return MinMaxNormalizer.fit(stacked)
