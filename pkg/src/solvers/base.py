"""
Shared machinery of the branch-and-bound solvers.

Solvers work on integer bitsets: the graph is relabeled so that bit i is
the i-th vertex of the solver's initial order, and candidate sets are
plain ints. The budget is checked at every search-tree node expansion.
"""

import time
from abc import ABC, abstractmethod
from collections.abc import Iterator, Sequence
from typing import ClassVar

from src.errors import EmptyGraphError
from src.graph.models import Graph
from src.solvers.models import Budget, SolveOutcome, SolverId, SolveStatus
from src.utils.logger import Logger


class BudgetExhaustedError(Exception):
    """Raised inside a search when the time or node limit is reached."""


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def degree_order(g: Graph) -> list[int]:
    """Vertices by degree descending, ties by lowest id."""
    return sorted(range(g.node_count), key=lambda v: (-g.degree(v), v))


def relabeled_masks(g: Graph, order: Sequence[int]) -> list[int]:
    position = [0] * g.node_count
    for i, v in enumerate(order):
        position[v] = i

    masks = []
    for v in order:
        mask = 0
        for u in g.adjacency[v]:
            mask |= 1 << position[u]
        masks.append(mask)
    return masks


def color_classes(candidates: int, masks: Sequence[int]) -> list[int]:
    """
    Greedy sequential coloring of a candidate set into independent sets.

    Each class is grown from the lowest remaining bit, skipping neighbors
    of the vertices already placed in it.
    """
    classes = []
    uncolored = candidates
    while uncolored:
        color_class = 0
        available = uncolored
        while available:
            low = available & -available
            v = low.bit_length() - 1
            color_class |= low
            available &= ~low & ~masks[v]
        uncolored &= ~color_class
        classes.append(color_class)
    return classes


def color_sort(candidates: int, masks: Sequence[int]) -> list[tuple[int, int]]:
    """Vertices of the candidate set paired with their 1-based color, ascending."""
    ordered = []
    for color, color_class in enumerate(color_classes(candidates, masks), start=1):
        ordered.extend((v, color) for v in iter_bits(color_class))
    return ordered


class SearchState:
    """
    Incumbent and budget accounting of a single search.
    """

    def __init__(
        self, order: list[int], masks: list[int], budget: Budget, started_at: float
    ):
        self.order = order
        self.masks = masks
        self.deadline = started_at + budget.time_limit_s
        self.node_limit = budget.node_limit
        self.nodes_expanded = 0
        self.best_size = 0
        self.best_mask = 0

    def tick(self):
        self.nodes_expanded += 1
        if self.node_limit is not None and self.nodes_expanded > self.node_limit:
            raise BudgetExhaustedError
        if time.perf_counter() > self.deadline:
            raise BudgetExhaustedError

    def offer(self, clique_mask: int, size: int):
        if size > self.best_size:
            self.best_size = size
            self.best_mask = clique_mask


class CliqueSolver(ABC):
    """
    Base class of the exact maximum-clique solvers.

    Subclasses choose the initial vertex order and implement the search
    over the relabeled bitsets.
    """

    solver_id: ClassVar[SolverId]

    def __init__(self, logger: Logger | None = None):
        self.logger = logger or Logger().get_logger()

    def initial_order(self, g: Graph) -> list[int]:
        return degree_order(g)

    @abstractmethod
    def search(self, g: Graph, state: SearchState):
        """Run the search, offering every improving clique to the state."""

    def solve(self, g: Graph, budget: Budget) -> SolveOutcome:
        """
        Find a maximum clique of g within the budget.

        Args:
            g (Graph): The graph.
            budget (Budget): Time and optional node limits.

        Returns:
            SolveOutcome: Exact with a maximum clique, or TimedOut with
            the best clique found before the budget ran out.

        Raises:
            EmptyGraphError: If g has no nodes.
        """
        if g.node_count == 0:
            raise EmptyGraphError(f"{self.solver_id} cannot solve an empty graph")

        started_at = time.perf_counter()
        order = self.initial_order(g)
        state = SearchState(order, relabeled_masks(g, order), budget, started_at)

        status = SolveStatus.EXACT
        try:
            self.search(g, state)
        except BudgetExhaustedError:
            status = SolveStatus.TIMED_OUT
        wall_time_s = time.perf_counter() - started_at

        clique = tuple(sorted(order[i] for i in iter_bits(state.best_mask)))
        self.logger.debug(
            "Solver finished",
            extra={
                "solver": str(self.solver_id),
                "size": len(clique),
                "status": str(status),
                "wall_time_s": wall_time_s,
                "nodes_expanded": state.nodes_expanded,
            },
        )
        return SolveOutcome(
            solver=self.solver_id,
            clique=clique,
            size=len(clique),
            wall_time_s=wall_time_s,
            status=status,
            nodes_expanded=state.nodes_expanded,
        )
