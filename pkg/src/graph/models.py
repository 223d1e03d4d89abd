"""
Graph domain models.

This module defines the immutable undirected simple graph every other
module consumes, plus the results of the structural primitives (core
decomposition and triangle counts).
"""

from collections.abc import Iterable, Iterator, Sequence
from functools import cached_property

from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.errors import NodeOutOfRangeError


class Graph(BaseModel):
    """
    Undirected simple graph with contiguous node ids 0..node_count-1.

    Args:
        node_count (int): Number of nodes.
        adjacency (tuple[tuple[int, ...], ...]): Sorted neighbor list per node.
        edge_count (int): Number of undirected edges.
    """

    model_config = ConfigDict(frozen=True)

    node_count: int = Field(..., ge=0, description="Number of nodes.")
    adjacency: tuple[tuple[int, ...], ...] = Field(
        ..., description="Sorted neighbor list per node."
    )
    edge_count: int = Field(..., ge=0, description="Number of undirected edges.")

    @model_validator(mode="after")
    def _check_invariants(self) -> "Graph":
        if len(self.adjacency) != self.node_count:
            raise ValueError("adjacency must have one neighbor list per node")

        degree_total = 0
        for u, neighbors in enumerate(self.adjacency):
            if list(neighbors) != sorted(set(neighbors)):
                raise ValueError(f"neighbors of {u} must be sorted and unique")
            for v in neighbors:
                if v == u:
                    raise ValueError(f"self-loop on node {u}")
                if not 0 <= v < self.node_count:
                    raise ValueError(f"neighbor {v} of {u} out of range")
            degree_total += len(neighbors)

        for u, v in self.edges():
            if u not in self.neighbor_sets[v]:
                raise ValueError(f"edge ({u}, {v}) is not symmetric")

        if degree_total != 2 * self.edge_count:
            raise ValueError("edge_count must equal half the degree sum")
        return self

    @classmethod
    def from_edges(cls, node_count: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """
        Build a graph from 0-based endpoint pairs.

        Self-loops are dropped and both orientations of an edge collapse
        to a single edge.

        Args:
            node_count (int): Number of nodes.
            edges (Iterable[tuple[int, int]]): 0-based endpoint pairs.

        Returns:
            Graph: The normalized graph.

        Raises:
            NodeOutOfRangeError: If an endpoint is outside 0..node_count-1.
        """
        neighbor_sets: list[set[int]] = [set() for _ in range(node_count)]
        for u, v in edges:
            if not (0 <= u < node_count and 0 <= v < node_count):
                raise NodeOutOfRangeError(
                    f"edge ({u}, {v}) outside 0..{node_count - 1}"
                )
            if u == v:
                continue
            neighbor_sets[u].add(v)
            neighbor_sets[v].add(u)

        adjacency = tuple(tuple(sorted(neighbors)) for neighbors in neighbor_sets)
        edge_count = sum(len(neighbors) for neighbors in adjacency) // 2

        # Invariants hold by construction, skip the O(E) validator.
        return cls.model_construct(
            node_count=node_count, adjacency=adjacency, edge_count=edge_count
        )

    @cached_property
    def neighbor_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(neighbors) for neighbors in self.adjacency)

    @cached_property
    def neighbor_masks(self) -> tuple[int, ...]:
        """Neighborhoods as integer bitsets, bit v set iff v is adjacent."""
        masks = []
        for neighbors in self.adjacency:
            mask = 0
            for v in neighbors:
                mask |= 1 << v
            masks.append(mask)
        return tuple(masks)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.neighbor_sets[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield every edge once as (u, v) with u < v."""
        for u, neighbors in enumerate(self.adjacency):
            for v in neighbors:
                if u < v:
                    yield u, v

    def relabel(self, permutation: Sequence[int]) -> "Graph":
        """
        Return the isomorphic graph where node v becomes permutation[v].
        """
        if sorted(permutation) != list(range(self.node_count)):
            raise ValueError("permutation must be a rearrangement of the node ids")
        return Graph.from_edges(
            self.node_count,
            ((permutation[u], permutation[v]) for u, v in self.edges()),
        )


class CoreDecomposition(BaseModel):
    """
    Result of k-core peeling.

    Args:
        core_number (tuple[int, ...]): Core number per node.
        degeneracy (int): Maximum core number.
        peel_order (tuple[int, ...]): Nodes in removal order.
    """

    core_number: tuple[int, ...]
    degeneracy: int = Field(..., ge=0)
    peel_order: tuple[int, ...]


class TriangleCounts(BaseModel):
    """
    Triangle statistics of a graph.

    Args:
        total (int): Number of triangles.
        per_edge (dict[tuple[int, int], int]): Triangles through each edge (u < v).
    """

    total: int = Field(..., ge=0)
    per_edge: dict[tuple[int, int], int]
