"""
Degeneracy-ordered search.

Vertices are relabeled in peel order, so the right-neighborhood of bit i
(its neighbors peeled later) holds at most `degeneracy` vertices. Each
right-neighborhood is searched with the coloring bound, and the search
stops as soon as a clique of size degeneracy + 1 is found.
"""

from src.graph.models import Graph
from src.graph.structure import CoreDecomposition, core_decomposition
from src.solvers.base import SearchState
from src.solvers.color_bb import ColorBB
from src.solvers.models import Budget, SolveOutcome, SolverId


class DegenBB(ColorBB):
    solver_id = SolverId.DEGEN_BB

    _cores: tuple[Graph, CoreDecomposition] | None = None

    def cores_of(self, g: Graph) -> CoreDecomposition:
        # One peel per solve: initial_order and search share it.
        if self._cores is None or self._cores[0] is not g:
            self._cores = (g, core_decomposition(g))
        return self._cores[1]

    def initial_order(self, g: Graph) -> list[int]:
        return list(self.cores_of(g).peel_order)

    def search(self, g: Graph, state: SearchState):
        upper = self.cores_of(g).degeneracy + 1

        # Last peeled (the densest core) first.
        for i in reversed(range(g.node_count)):
            state.tick()
            if state.best_size >= upper:
                return
            right = state.masks[i] >> (i + 1) << (i + 1)
            if 1 + right.bit_count() <= state.best_size:
                continue
            self._expand(state, 1 << i, 1, right)


def solve_degen_bb(g: Graph, b: Budget) -> SolveOutcome:
    return DegenBB().solve(g, b)
