"""
Feature models: the 12-dimensional global feature vector and the two
normalizers used by the learning modules.
"""

from typing import Self

import numpy as np
import numpy.typing as npt
from pydantic import BaseModel, ConfigDict, Field

from src.constants import FEATURE_COLUMNS
from src.errors import ShapeMismatchError, TooFewRowsError


class GlobalFeatures(BaseModel):
    """
    Global structural features of one graph.

    Args:
        V (int): Number of nodes.
        E (int): Number of edges.
        d_max (int): Maximum degree.
        d_avg (float): Average degree 2E/V.
        D (float): Edge density.
        r (float): Degree assortativity (0 when undefined, see r_degenerate).
        T (int): Number of triangles.
        T_avg (float): Mean triangles through an edge.
        T_max (int): Maximum triangles through an edge.
        kappa_avg (float): Average local clustering coefficient.
        kappa (float): Global clustering coefficient.
        K (int): Maximum core number.
        r_degenerate (bool): True when assortativity is undefined.
    """

    model_config = ConfigDict(frozen=True)

    V: int = Field(..., ge=0)
    E: int = Field(..., ge=0)
    d_max: int = Field(..., ge=0)
    d_avg: float = Field(..., ge=0)
    D: float = Field(..., ge=0, le=1)
    r: float = Field(..., ge=-1, le=1)
    T: int = Field(..., ge=0)
    T_avg: float = Field(..., ge=0)
    T_max: int = Field(..., ge=0)
    kappa_avg: float = Field(..., ge=0, le=1)
    kappa: float = Field(..., ge=0, le=1)
    K: int = Field(..., ge=0)
    r_degenerate: bool = Field(default=False, description="Assortativity undefined.")

    def as_vector(self) -> npt.NDArray[np.float64]:
        """Return the 12 features as a float vector in column order."""
        return np.array([getattr(self, name) for name in FEATURE_COLUMNS], dtype=np.float64)

    @classmethod
    def from_vector(cls, values: npt.ArrayLike, r_degenerate: bool = False) -> Self:
        vector = np.asarray(values, dtype=np.float64)
        if vector.shape != (len(FEATURE_COLUMNS),):
            raise ShapeMismatchError(
                f"expected {len(FEATURE_COLUMNS)} features, got shape {vector.shape}"
            )
        fields = {}
        for name, value in zip(FEATURE_COLUMNS, vector, strict=True):
            if cls.model_fields[name].annotation is int:
                fields[name] = int(round(value))
            else:
                fields[name] = float(value)
        return cls(**fields, r_degenerate=r_degenerate)


def _as_matrix(m: npt.ArrayLike) -> npt.NDArray[np.float64]:
    matrix = np.asarray(m, dtype=np.float64)
    if matrix.ndim == 1:
        matrix = matrix.reshape(-1, 1)
    if matrix.ndim != 2:
        raise ShapeMismatchError(f"expected a 2-D matrix, got {matrix.ndim} dimensions")
    return matrix


class MinMaxNormalizer(BaseModel):
    """
    Per-column min-max scaling to [0, 1]; constant columns map to 0.
    """

    x_min: list[float]
    x_max: list[float]

    @classmethod
    def fit(cls, m: npt.ArrayLike) -> Self:
        matrix = _as_matrix(m)
        if matrix.shape[0] == 0:
            raise TooFewRowsError("min-max scaling needs at least one row")
        return cls(x_min=matrix.min(axis=0).tolist(), x_max=matrix.max(axis=0).tolist())

    def transform(self, m: npt.ArrayLike) -> npt.NDArray[np.float64]:
        matrix = _as_matrix(m)
        if matrix.shape[1] != len(self.x_min):
            raise ShapeMismatchError(
                f"normalizer fit on {len(self.x_min)} columns, got {matrix.shape[1]}"
            )
        x_min = np.asarray(self.x_min)
        span = np.asarray(self.x_max) - x_min
        constant = span == 0
        scaled = (matrix - x_min) / np.where(constant, 1.0, span)
        scaled[:, constant] = 0.0
        return scaled


class ZScoreNormalizer(BaseModel):
    """
    Per-column standardization with the population standard deviation;
    constant columns map to 0.
    """

    mu: list[float]
    sigma: list[float]

    @classmethod
    def fit(cls, m: npt.ArrayLike) -> Self:
        matrix = _as_matrix(m)
        if matrix.shape[0] < 2:
            raise TooFewRowsError(
                f"z-score scaling needs at least two rows, got {matrix.shape[0]}"
            )
        sigma = matrix.std(axis=0)
        sigma[np.ptp(matrix, axis=0) == 0] = 0.0
        return cls(mu=matrix.mean(axis=0).tolist(), sigma=sigma.tolist())

    def transform(self, m: npt.ArrayLike) -> npt.NDArray[np.float64]:
        matrix = _as_matrix(m)
        if matrix.shape[1] != len(self.mu):
            raise ShapeMismatchError(
                f"normalizer fit on {len(self.mu)} columns, got {matrix.shape[1]}"
            )
        sigma = np.asarray(self.sigma)
        constant = sigma == 0
        scaled = (matrix - np.asarray(self.mu)) / np.where(constant, 1.0, sigma)
        scaled[:, constant] = 0.0
        return scaled
