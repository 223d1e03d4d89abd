"""
The four-solver portfolio and its outcome tables.
"""

from collections.abc import Iterable
from pathlib import Path

import pandas as pd

from src.constants import OUTCOME_COLUMNS
from src.errors import DatasetIoError, EmptyGraphError, SchemaMismatchError
from src.graph.models import Graph
from src.graph.structure import core_decomposition
from src.solvers.base import CliqueSolver
from src.solvers.color_bb import ColorBB
from src.solvers.degen_bb import DegenBB
from src.solvers.dynorder_bb import DynOrderBB
from src.solvers.models import Budget, SolveOutcome, SolverId, SolveStatus
from src.solvers.partition_bb import PartitionBoundBB
from src.utils.logger import Logger

SOLVERS: dict[SolverId, type[CliqueSolver]] = {
    SolverId.COLOR_BB: ColorBB,
    SolverId.DEGEN_BB: DegenBB,
    SolverId.DYN_ORDER_BB: DynOrderBB,
    SolverId.PARTITION_BOUND_BB: PartitionBoundBB,
}


def clique_core_gap(g: Graph, omega: int) -> int:
    """(degeneracy + 1) - omega, never negative when omega is exact."""
    return core_decomposition(g).degeneracy + 1 - omega


def run_portfolio(
    g: Graph, b: Budget, logger: Logger | None = None
) -> list[SolveOutcome]:
    """
    Run every solver on g, each under its own copy of the budget.

    Args:
        g (Graph): The graph.
        b (Budget): Per-solver budget.
        logger (Logger | None): Logger handed to the solvers.

    Returns:
        list[SolveOutcome]: One outcome per solver, in SolverId order.

    Raises:
        EmptyGraphError: If g has no nodes.
    """
    if g.node_count == 0:
        raise EmptyGraphError("cannot run the portfolio on an empty graph")
    return [SOLVERS[solver_id](logger).solve(g, b) for solver_id in SolverId]


def outcomes_frame(outcomes: Iterable[tuple[str, SolveOutcome]]) -> pd.DataFrame:
    """
    Build the outcome table from (instance id, outcome) pairs, sorted by
    instance then solver order.
    """
    rows = [
        {
            "instance": instance_id,
            "solver": str(outcome.solver),
            "size": outcome.size,
            "wall_time_s": outcome.wall_time_s,
            "status": str(outcome.status),
            "nodes_expanded": outcome.nodes_expanded,
        }
        for instance_id, outcome in sorted(
            outcomes, key=lambda pair: (pair[0], pair[1].solver.index)
        )
    ]
    return pd.DataFrame(rows, columns=list(OUTCOME_COLUMNS))


def write_outcomes_csv(
    outcomes: Iterable[tuple[str, SolveOutcome]], path: Path
) -> None:
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        outcomes_frame(outcomes).to_csv(path, index=False)
    except OSError as e:
        raise DatasetIoError(f"cannot write outcomes {path}: {e}") from e


def read_outcomes_csv(path: Path) -> dict[str, list[SolveOutcome]]:
    """
    Read an outcome table, grouped by instance id in solver order.

    Raises:
        DatasetIoError: If the file cannot be read.
        SchemaMismatchError: If a required column is missing.
    """
    try:
        frame = pd.read_csv(path, dtype={"instance": str}, float_precision="round_trip")
    except OSError as e:
        raise DatasetIoError(f"cannot read outcomes {path}: {e}") from e

    missing = [c for c in OUTCOME_COLUMNS if c not in frame.columns]
    if missing:
        raise SchemaMismatchError(f"outcome table {path} lacks columns {missing}")

    grouped: dict[str, list[SolveOutcome]] = {}
    for row in frame.to_dict(orient="records"):
        grouped.setdefault(row["instance"], []).append(
            SolveOutcome(
                solver=SolverId(row["solver"]),
                size=int(row["size"]),
                wall_time_s=float(row["wall_time_s"]),
                status=SolveStatus(row["status"]),
                nodes_expanded=int(row["nodes_expanded"]),
            )
        )
    for outcomes in grouped.values():
        outcomes.sort(key=lambda outcome: outcome.solver.index)
    return grouped
