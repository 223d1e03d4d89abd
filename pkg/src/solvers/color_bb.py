"""
Branch and bound with a greedy-coloring bound recomputed for every
candidate set.
"""

from src.graph.models import Graph
from src.solvers.base import CliqueSolver, SearchState, color_sort
from src.solvers.models import Budget, SolveOutcome, SolverId


class ColorBB(CliqueSolver):
    """
    Vertices are expanded from the highest color down; a vertex with
    color c can extend the current clique by at most c vertices.
    """

    solver_id = SolverId.COLOR_BB

    def search(self, g: Graph, state: SearchState):
        self._expand(state, 0, 0, (1 << g.node_count) - 1)

    def _expand(self, state: SearchState, clique: int, size: int, candidates: int):
        state.tick()
        if not candidates:
            state.offer(clique, size)
            return

        for v, color in reversed(color_sort(candidates, state.masks)):
            if size + color <= state.best_size:
                return
            bit = 1 << v
            self._expand(state, clique | bit, size + 1, candidates & state.masks[v])
            candidates &= ~bit


def solve_color_bb(g: Graph, b: Budget) -> SolveOutcome:
    return ColorBB().solve(g, b)
