"""
Branch and bound with a dynamic expansion order.

At every search node the candidate set is recolored; only vertices in
color classes numbered at least best - |C| + 1 can lead to a larger
clique. Among those, the next branching vertex is picked on the fly: the
smallest color class first, then the highest degree within the remaining
candidates, then the lowest node id.
"""

from src.graph.models import Graph
from src.solvers.base import CliqueSolver, SearchState, color_classes, iter_bits
from src.solvers.models import Budget, SolveOutcome, SolverId


class DynOrderBB(CliqueSolver):
    solver_id = SolverId.DYN_ORDER_BB

    def search(self, g: Graph, state: SearchState):
        self._expand(state, 0, 0, (1 << g.node_count) - 1)

    def _expand(self, state: SearchState, clique: int, size: int, candidates: int):
        state.tick()
        if not candidates:
            state.offer(clique, size)
            return

        classes = color_classes(candidates, state.masks)
        while size + sum(1 for c in classes if c) > state.best_size:
            first_useful = max(state.best_size - size, 0)
            picked = self._pick(state, classes, first_useful, candidates)
            if picked is None:
                return

            v, class_index = picked
            bit = 1 << v
            classes[class_index] &= ~bit
            candidates &= ~bit
            self._expand(state, clique | bit, size + 1, candidates & state.masks[v])

    @staticmethod
    def _pick(
        state: SearchState, classes: list[int], first_useful: int, candidates: int
    ) -> tuple[int, int] | None:
        best_key = None
        picked = None
        for class_index in range(first_useful, len(classes)):
            color_class = classes[class_index]
            class_size = color_class.bit_count()
            for v in iter_bits(color_class):
                key = (
                    class_size,
                    -(state.masks[v] & candidates).bit_count(),
                    state.order[v],
                )
                if best_key is None or key < best_key:
                    best_key, picked = key, (v, class_index)
        return picked


def solve_dynorder_bb(g: Graph, b: Budget) -> SolveOutcome:
    return DynOrderBB().solve(g, b)
