"""
Dataset models.

This module defines the labeled training unit, the three multi-label
handling variants, train/test splits and the synthetic corpus
specifications.
"""

from enum import StrEnum
from typing import Generic, TypeVar

import numpy as np
import numpy.typing as npt
from pydantic import BaseModel, ConfigDict, Field, field_validator

from src.constants import FEATURE_COUNT
from src.features.models import GlobalFeatures
from src.graph.models import Graph
from src.solvers.models import SolverId

T = TypeVar("T")


class DatasetVariant(StrEnum):
    METHOD1 = "Method1"
    METHOD2 = "Method2"
    METHOD3 = "Method3"

    @property
    def flag(self) -> str:
        return f"m{self.value[-1]}"

    @classmethod
    def from_flag(cls, flag: str) -> "DatasetVariant":
        """Accept both `m2` and `Method2`."""
        for variant in cls:
            if flag in (variant.flag, variant.value):
                return variant
        raise ValueError(f"unknown dataset variant {flag!r}")


class LabeledInstance(BaseModel):
    """
    One training unit: features plus the set of winning solvers.

    Args:
        instance_id (str): Unique instance id.
        features (GlobalFeatures): Global features of the graph.
        graph_ref (str | None): Path of the graph file, when known.
        winners (tuple[SolverId, ...]): Winning solvers in solver order.
    """

    model_config = ConfigDict(frozen=True)

    instance_id: str = Field(..., min_length=1)
    features: GlobalFeatures
    graph_ref: str | None = None
    winners: tuple[SolverId, ...] = Field(..., min_length=1)

    @field_validator("winners")
    @classmethod
    def _normalize_winners(cls, winners: tuple[SolverId, ...]) -> tuple[SolverId, ...]:
        return tuple(sorted(set(winners), key=lambda solver: solver.index))

    @property
    def is_multi_label(self) -> bool:
        return len(self.winners) > 1

    @property
    def label(self) -> int:
        """Class index of the first winner; single-label rows have exactly one."""
        return self.winners[0].index

    def target_vector(self) -> npt.NDArray[np.float64]:
        targets = np.zeros(len(SolverId), dtype=np.float64)
        for solver in self.winners:
            targets[solver.index] = 1.0
        return targets


class BinaryDataset(BaseModel):
    """
    Per-solver binary view of a labeled dataset: target 1 iff the solver wins.
    """

    solver: SolverId
    instances: list[LabeledInstance]
    targets: list[int]

    def feature_matrix(self) -> npt.NDArray[np.float64]:
        return feature_matrix(self.instances)

    def target_vector(self) -> npt.NDArray[np.int64]:
        return np.asarray(self.targets, dtype=np.int64)


class Split(BaseModel, Generic[T]):
    """
    A seeded train/test partition.
    """

    train: list[T]
    test: list[T]
    seed: int
    ratio: float


class GeneratorFamily(StrEnum):
    ERDOS_RENYI = "erdos_renyi"
    PREFERENTIAL_ATTACHMENT = "preferential_attachment"
    PLANTED_CLIQUE = "planted_clique"


class CorpusSpec(BaseModel):
    """
    Parameters of a batch of synthetic graphs of one family.

    Args:
        family (GeneratorFamily): Random graph generator.
        node_range (tuple[int, int]): Inclusive node count range.
        density_range (tuple[float, float]): Inclusive edge density range.
        count (int): Number of graphs.
        seed (int): Seed of the batch.
        planted_size (int | None): Planted clique size (planted family only);
            defaults to round(sqrt(n)).
    """

    family: GeneratorFamily
    node_range: tuple[int, int]
    density_range: tuple[float, float]
    count: int
    seed: int = 0
    planted_size: int | None = None


class GeneratedGraph(BaseModel):
    """
    A generated graph with its provenance.
    """

    instance_id: str
    family: GeneratorFamily
    node_count: int
    density: float
    seed: int
    planted_size: int | None = None
    graph: Graph | None = Field(default=None, exclude=True)


def feature_matrix(instances: list[LabeledInstance]) -> npt.NDArray[np.float64]:
    if not instances:
        return np.zeros((0, FEATURE_COUNT))
    return np.vstack([instance.features.as_vector() for instance in instances])


def label_vector(instances: list[LabeledInstance]) -> npt.NDArray[np.int64]:
    return np.asarray([instance.label for instance in instances], dtype=np.int64)


class DatasetManifest(BaseModel):
    """
    Provenance of a persisted dataset file.

    Args:
        variant (DatasetVariant | None): Multi-label handling variant; None
            for the labeled table before any variant transform.
        seed (int): Split seed.
        ratio (float): Train fraction of the split.
        budget_s (float): Per-solver time limit used for labeling.
        tie_epsilon_s (float): Labeling timing tolerance.
        generator_specs (list[CorpusSpec]): Specs of the generated corpus, if any.
        split (str | None): "train", "test" or None for an unsplit table.
        solver (SolverId | None): Solver of a Method3 binary dataset.
        label_distribution (dict[str, int]): Winner counts per solver.
        version (str): Toolkit version that wrote the file.
    """

    variant: DatasetVariant | None
    seed: int
    ratio: float
    budget_s: float
    tie_epsilon_s: float
    generator_specs: list[CorpusSpec] = Field(default_factory=list)
    split: str | None = None
    solver: SolverId | None = None
    label_distribution: dict[str, int] = Field(default_factory=dict)
    version: str = ""


class CorpusManifest(BaseModel):
    """
    Provenance of a generated corpus directory.
    """

    specs: list[CorpusSpec]
    graphs: list[GeneratedGraph]
