from src.solvers.color_bb import ColorBB, solve_color_bb
from src.solvers.degen_bb import DegenBB, solve_degen_bb
from src.solvers.dynorder_bb import DynOrderBB, solve_dynorder_bb
from src.solvers.models import Budget, SolveOutcome, SolverId, SolveStatus
from src.solvers.partition_bb import PartitionBoundBB, solve_partition_bound_bb
from src.solvers.portfolio import (
    SOLVERS,
    clique_core_gap,
    read_outcomes_csv,
    run_portfolio,
    write_outcomes_csv,
)

__all__ = [
    "SOLVERS",
    "Budget",
    "ColorBB",
    "DegenBB",
    "DynOrderBB",
    "PartitionBoundBB",
    "SolveOutcome",
    "SolveStatus",
    "SolverId",
    "clique_core_gap",
    "read_outcomes_csv",
    "run_portfolio",
    "solve_color_bb",
    "solve_degen_bb",
    "solve_dynorder_bb",
    "solve_partition_bound_bb",
    "write_outcomes_csv",
]
