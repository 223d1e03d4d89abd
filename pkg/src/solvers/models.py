"""
Solver portfolio models.
"""

from enum import StrEnum

from pydantic import BaseModel, ConfigDict, Field, model_validator


class SolverId(StrEnum):
    COLOR_BB = "ColorBB"
    DEGEN_BB = "DegenBB"
    DYN_ORDER_BB = "DynOrderBB"
    PARTITION_BOUND_BB = "PartitionBoundBB"

    @property
    def index(self) -> int:
        return list(SolverId).index(self)

    @classmethod
    def from_index(cls, index: int) -> "SolverId":
        return list(cls)[index]


class SolveStatus(StrEnum):
    EXACT = "Exact"
    TIMED_OUT = "TimedOut"


class Budget(BaseModel):
    """
    Search budget of one solver run.

    Args:
        time_limit_s (float): Wall-clock limit in seconds.
        node_limit (int | None): Optional limit on search-tree nodes.
    """

    model_config = ConfigDict(frozen=True)

    time_limit_s: float = Field(..., gt=0, description="Wall-clock limit in seconds.")
    node_limit: int | None = Field(
        default=None, ge=1, description="Optional limit on search-tree nodes."
    )


class SolveOutcome(BaseModel):
    """
    One solver's result on one graph.

    Args:
        solver (SolverId): The solver.
        clique (tuple[int, ...]): Sorted node ids of the best clique found.
        size (int): Clique size.
        wall_time_s (float): Search wall time in seconds.
        status (SolveStatus): Exact when the search completed.
        nodes_expanded (int): Search-tree nodes expanded.
    """

    model_config = ConfigDict(frozen=True)

    solver: SolverId
    clique: tuple[int, ...] = ()
    size: int = Field(..., ge=0)
    wall_time_s: float = Field(..., ge=0)
    status: SolveStatus
    nodes_expanded: int = Field(default=0, ge=0)

    @model_validator(mode="after")
    def _check_size(self) -> "SolveOutcome":
        # Outcomes read back from CSV carry no witness.
        if self.clique and len(self.clique) != self.size:
            raise ValueError("size must equal the clique length")
        return self
