"""
Seeded train/test splitting.
"""

import math
from collections.abc import Sequence
from typing import TypeVar

import numpy as np

from src.dataset.models import Split
from src.errors import TooFewInstancesError

T = TypeVar("T")


def train_test_split(data: Sequence[T], ratio: float, seed: int) -> Split[T]:
    """
    Permute the data uniformly under seed and cut it at floor(ratio * N).

    Args:
        data (Sequence[T]): Items to split.
        ratio (float): Train fraction, strictly between 0 and 1.
        seed (int): Permutation seed.

    Returns:
        Split[T]: The train prefix and test suffix of the permutation.

    Raises:
        ValueError: If ratio is not strictly between 0 and 1.
        TooFewInstancesError: If data has fewer than two items.
    """
    if not 0 < ratio < 1:
        raise ValueError(f"split ratio must lie in (0, 1), got {ratio}")
    if len(data) < 2:
        raise TooFewInstancesError(f"need at least 2 instances to split, got {len(data)}")

    permutation = np.random.default_rng(seed).permutation(len(data))
    # Guard against 0.8 * 10 landing at 7.999...
    n_train = math.floor(ratio * len(data) + 1e-9)
    return Split(
        train=[data[i] for i in permutation[:n_train]],
        test=[data[i] for i in permutation[n_train:]],
        seed=seed,
        ratio=ratio,
    )
