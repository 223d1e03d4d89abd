"""
Structural primitives: degrees, k-core peeling, triangles and clique checks.
"""

import heapq
from collections.abc import Iterable

import numpy as np
import numpy.typing as npt

from src.errors import NodeOutOfRangeError
from src.graph.models import CoreDecomposition, Graph, TriangleCounts


def degree_sequence(graph: Graph) -> npt.NDArray[np.int64]:
    return np.array([len(neighbors) for neighbors in graph.adjacency], dtype=np.int64)


def core_decomposition(graph: Graph) -> CoreDecomposition:
    """
    Peel minimum-degree nodes one at a time (ties: lowest node id).

    A node's core number is the largest minimum degree seen up to its
    removal; the degeneracy is the largest core number. Every node has at
    most `degeneracy` neighbors later in the peel order.

    Args:
        graph (Graph): The graph to decompose.

    Returns:
        CoreDecomposition: Core numbers, degeneracy and peel order.
    """
    remaining_degree = [len(neighbors) for neighbors in graph.adjacency]
    removed = [False] * graph.node_count
    core_number = [0] * graph.node_count
    peel_order: list[int] = []

    heap = [(degree, v) for v, degree in enumerate(remaining_degree)]
    heapq.heapify(heap)

    current_core = 0
    while heap:
        degree, v = heapq.heappop(heap)
        if removed[v] or degree != remaining_degree[v]:
            continue  # stale heap entry

        removed[v] = True
        current_core = max(current_core, degree)
        core_number[v] = current_core
        peel_order.append(v)

        for u in graph.adjacency[v]:
            if not removed[u]:
                remaining_degree[u] -= 1
                heapq.heappush(heap, (remaining_degree[u], u))

    return CoreDecomposition(
        core_number=tuple(core_number),
        degeneracy=max(core_number, default=0),
        peel_order=tuple(peel_order),
    )


def count_triangles(graph: Graph) -> TriangleCounts:
    """
    Count triangles through every edge with bitset intersections.

    Args:
        graph (Graph): The graph.

    Returns:
        TriangleCounts: Total triangles and the per-edge counts.
    """
    masks = graph.neighbor_masks
    per_edge = {(u, v): (masks[u] & masks[v]).bit_count() for u, v in graph.edges()}
    return TriangleCounts(total=sum(per_edge.values()) // 3, per_edge=per_edge)


def is_clique(graph: Graph, nodes: Iterable[int]) -> bool:
    """
    Check that every pair of the given nodes is adjacent.

    The empty set and singletons are cliques.

    Raises:
        NodeOutOfRangeError: If a node is not in the graph.
    """
    members = sorted(set(nodes))
    for v in members:
        if not 0 <= v < graph.node_count:
            raise NodeOutOfRangeError(f"node {v} outside 0..{graph.node_count - 1}")

    masks = graph.neighbor_masks
    for i, u in enumerate(members):
        for v in members[i + 1 :]:
            if not (masks[u] >> v) & 1:
                return False
    return True
