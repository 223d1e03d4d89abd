"""
Structural feature extraction.

Every quantity here is computed from integer counts and converted to a
float once (or summed with math.fsum), so relabeling the nodes of a graph
leaves the feature vector bit-for-bit unchanged.
"""

import math
from fractions import Fraction

import numpy as np
import numpy.typing as npt

from src.errors import EmptyGraphError, NodeOutOfRangeError
from src.features.models import GlobalFeatures
from src.graph.models import Graph
from src.graph.structure import core_decomposition, count_triangles


def assortativity_with_flag(g: Graph) -> tuple[float, bool]:
    """
    Degree assortativity over all edges, plus a degenerate flag.

    With S1 = sum(j*k), S2 = sum(j+k), S3 = sum(j^2+k^2) over the M edges,
    r = (4M*S1 - S2^2) / (2M*S3 - S2^2). Both are exact integers.

    Returns:
        tuple[float, bool]: (r, degenerate). Degenerate when the graph has
        no edges or all edge endpoints share one degree; r is 0 then.
    """
    degrees = [len(neighbors) for neighbors in g.adjacency]
    s1 = s2 = s3 = 0
    for u, v in g.edges():
        j, k = degrees[u], degrees[v]
        s1 += j * k
        s2 += j + k
        s3 += j * j + k * k

    m = g.edge_count
    numerator = 4 * m * s1 - s2 * s2
    denominator = 2 * m * s3 - s2 * s2
    if m == 0 or denominator == 0:
        return 0.0, True
    return float(Fraction(numerator, denominator)), False


def assortativity(g: Graph) -> float:
    return assortativity_with_flag(g)[0]


def _triangles_at(g: Graph, v: int) -> int:
    masks = g.neighbor_masks
    return sum((masks[u] & masks[v]).bit_count() for u in g.adjacency[v]) // 2


def local_clustering(g: Graph, v: int) -> float:
    """
    Fraction of neighbor pairs of v that are adjacent; 0 for degree <= 1.

    Raises:
        NodeOutOfRangeError: If v is not a node of g.
    """
    if not 0 <= v < g.node_count:
        raise NodeOutOfRangeError(f"node {v} outside 0..{g.node_count - 1}")
    k = g.degree(v)
    if k <= 1:
        return 0.0
    return 2 * _triangles_at(g, v) / (k * (k - 1))


def avg_local_clustering(g: Graph) -> float:
    """
    Arithmetic mean of the local clustering coefficients.

    Raises:
        EmptyGraphError: If g has no nodes.
    """
    if g.node_count == 0:
        raise EmptyGraphError("average clustering of an empty graph")
    return math.fsum(local_clustering(g, v) for v in range(g.node_count)) / g.node_count


def global_clustering(g: Graph) -> float:
    """
    3 * triangles / connected triplets, 0 when there are no triplets.
    """
    triplets = sum(math.comb(len(neighbors), 2) for neighbors in g.adjacency)
    if triplets == 0:
        return 0.0
    return 3 * count_triangles(g).total / triplets


def extract_global(g: Graph) -> GlobalFeatures:
    """
    Compute the 12 global features of a graph.

    Args:
        g (Graph): The graph.

    Returns:
        GlobalFeatures: The feature vector.

    Raises:
        EmptyGraphError: If g has no nodes.
    """
    if g.node_count == 0:
        raise EmptyGraphError("cannot extract features from an empty graph")

    n, m = g.node_count, g.edge_count
    degrees = [len(neighbors) for neighbors in g.adjacency]
    triangles = count_triangles(g)
    r, r_degenerate = assortativity_with_flag(g)

    triplets = sum(math.comb(d, 2) for d in degrees)
    per_edge = triangles.per_edge.values()

    return GlobalFeatures(
        V=n,
        E=m,
        d_max=max(degrees),
        d_avg=2 * m / n,
        D=2 * m / (n * (n - 1)) if n >= 2 else 0.0,
        r=r,
        T=triangles.total,
        T_avg=3 * triangles.total / m if m else 0.0,
        T_max=max(per_edge, default=0),
        kappa_avg=avg_local_clustering(g),
        kappa=3 * triangles.total / triplets if triplets else 0.0,
        K=core_decomposition(g).degeneracy,
        r_degenerate=r_degenerate,
    )


def node_features(g: Graph) -> npt.NDArray[np.int64]:
    """
    Unnormalized node features: one (degree, core number) row per node.

    Raises:
        EmptyGraphError: If g has no nodes.
    """
    if g.node_count == 0:
        raise EmptyGraphError("cannot build node features of an empty graph")
    cores = core_decomposition(g).core_number
    degrees = [len(neighbors) for neighbors in g.adjacency]
    return np.column_stack([degrees, cores]).astype(np.int64)
