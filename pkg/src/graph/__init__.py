from src.graph.models import CoreDecomposition, Graph, TriangleCounts
from src.graph.parser import (
    load_graph,
    parse_dimacs_clq,
    parse_edge_list,
    serialize_dimacs,
)
from src.graph.structure import (
    core_decomposition,
    count_triangles,
    degree_sequence,
    is_clique,
)

__all__ = [
    "CoreDecomposition",
    "Graph",
    "TriangleCounts",
    "core_decomposition",
    "count_triangles",
    "degree_sequence",
    "is_clique",
    "load_graph",
    "parse_dimacs_clq",
    "parse_edge_list",
    "serialize_dimacs",
]
