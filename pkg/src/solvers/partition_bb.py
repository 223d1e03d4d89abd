"""
Branch and bound with an independent-set partition bound tightened by
conflict detection.

The color classes of the candidate set are read as soft clauses ("pick
one vertex of this class") and non-adjacent pairs as hard clauses. Unit
propagation finds disjoint subsets of classes that no clique can satisfy
together; each such subset lowers the bound |C| + #classes by one.
"""

from collections import deque

from src.graph.models import Graph
from src.solvers.base import CliqueSolver, SearchState, color_classes, iter_bits
from src.solvers.models import Budget, SolveOutcome, SolverId


def _propagate(
    classes: list[int], excluded: set[int], masks: list[int]
) -> set[int] | None:
    """
    Unit-propagate the classes not yet excluded.

    Returns:
        set[int] | None: Indices of an inconsistent subset of classes, or
        None when propagation ends without an empty class.
    """
    current = {i: c for i, c in enumerate(classes) if i not in excluded}
    reasons = {i: {i} for i in current}
    queue = deque(i for i, c in current.items() if c.bit_count() == 1)

    while queue:
        unit = queue.popleft()
        u = current[unit].bit_length() - 1
        for j, remaining in current.items():
            if j == unit:
                continue
            kept = remaining & masks[u]
            if kept == remaining:
                continue
            current[j] = kept
            reasons[j] |= reasons[unit]
            if not kept:
                return reasons[j]
            if kept.bit_count() == 1:
                queue.append(j)
    return None


def count_conflicts(classes: list[int], masks: list[int], needed: int) -> int:
    """
    Count disjoint inconsistent subsets of color classes, up to `needed`.
    """
    excluded: set[int] = set()
    conflicts = 0
    while conflicts < needed:
        conflict = _propagate(classes, excluded, masks)
        if conflict is None:
            break
        excluded |= conflict
        conflicts += 1
    return conflicts


class PartitionBoundBB(CliqueSolver):
    solver_id = SolverId.PARTITION_BOUND_BB

    def search(self, g: Graph, state: SearchState):
        self._expand(state, 0, 0, (1 << g.node_count) - 1)

    def _expand(self, state: SearchState, clique: int, size: int, candidates: int):
        state.tick()
        if not candidates:
            state.offer(clique, size)
            return

        classes = color_classes(candidates, state.masks)
        slack = size + len(classes) - state.best_size
        if slack <= 0:
            return
        if count_conflicts(classes, state.masks, slack) >= slack:
            return

        ordered = [
            (v, color)
            for color, color_class in enumerate(classes, start=1)
            for v in iter_bits(color_class)
        ]
        for v, color in reversed(ordered):
            if size + color <= state.best_size:
                return
            bit = 1 << v
            self._expand(state, clique | bit, size + 1, candidates & state.masks[v])
            candidates &= ~bit


def solve_partition_bound_bb(g: Graph, b: Budget) -> SolveOutcome:
    return PartitionBoundBB().solve(g, b)
