"""
Graph file parsing and serialization.

This module reads the two formats graph instances ship in: DIMACS clique
files (`p edge n m` header, 1-based `e u v` lines) and plain edge lists
(Network Repository style, `%`/`#` comments). Both normalize to a simple
undirected Graph.
"""

from collections.abc import Iterable
from io import StringIO
from pathlib import Path
from typing import TextIO

from src.constants import (
    DIMACS_FORMAT_WORDS,
    DIMACS_SUFFIXES,
    EDGE_LIST_COMMENT_PREFIXES,
)
from src.errors import (
    EmptyGraphError,
    MalformedHeaderError,
    MalformedLineError,
    NodeOutOfRangeError,
)
from src.graph.models import Graph
from src.utils.logger import Logger

logger = Logger().get_logger()


def _lines(text: str | TextIO) -> Iterable[str]:
    if isinstance(text, str):
        return StringIO(text)
    return text


def parse_dimacs_clq(text: str | TextIO) -> Graph:
    """
    Parse a DIMACS clique-format document.

    Duplicate `e` lines and both orientations of an edge collapse to one
    edge; self-loop lines are dropped. The declared edge count in the
    header is advisory: a mismatch is logged as a warning.

    Args:
        text (str | TextIO): The document or an open text stream.

    Returns:
        Graph: The parsed graph with 0-based node ids.

    Raises:
        MalformedHeaderError: If the `p edge n m` line is missing or invalid.
        MalformedLineError: If an edge line is not `e <int> <int>`.
        NodeOutOfRangeError: If an endpoint lies outside 1..n.
        EmptyGraphError: If the header declares zero nodes.
    """
    node_count: int | None = None
    declared_edges = 0
    edges: list[tuple[int, int]] = []

    for line_number, raw_line in enumerate(_lines(text), start=1):
        tokens = raw_line.split()
        if not tokens or tokens[0] == "c":
            continue

        if tokens[0] == "p":
            if node_count is not None:
                raise MalformedHeaderError(f"line {line_number}: duplicate header")
            node_count, declared_edges = _parse_header(tokens, line_number)
            continue

        if tokens[0] == "e":
            if node_count is None:
                raise MalformedHeaderError(
                    f"line {line_number}: edge before the `p edge n m` header"
                )
            u, v = _parse_endpoints(tokens[1:], line_number)
            if not (1 <= u <= node_count and 1 <= v <= node_count):
                raise NodeOutOfRangeError(
                    f"line {line_number}: edge ({u}, {v}) outside 1..{node_count}"
                )
            edges.append((u - 1, v - 1))
            continue

        raise MalformedLineError(f"line {line_number}: unknown line type {tokens[0]!r}")

    if node_count is None:
        raise MalformedHeaderError("missing `p edge n m` header")
    if node_count == 0:
        raise EmptyGraphError("header declares zero nodes")

    graph = Graph.from_edges(node_count, edges)
    if graph.edge_count != declared_edges:
        logger.warning(
            "DIMACS header edge count differs from the edge lines",
            extra={"declared_edges": declared_edges, "edge_count": graph.edge_count},
        )
    return graph


def _parse_header(tokens: list[str], line_number: int) -> tuple[int, int]:
    if len(tokens) != 4 or tokens[1] not in DIMACS_FORMAT_WORDS:
        raise MalformedHeaderError(
            f"line {line_number}: expected `p edge <n> <m>`, got {' '.join(tokens)!r}"
        )
    try:
        node_count, declared_edges = int(tokens[2]), int(tokens[3])
    except ValueError as e:
        raise MalformedHeaderError(f"line {line_number}: {e}") from e
    if node_count < 0 or declared_edges < 0:
        raise MalformedHeaderError(f"line {line_number}: negative counts")
    return node_count, declared_edges


def _parse_endpoints(tokens: list[str], line_number: int) -> tuple[int, int]:
    if len(tokens) < 2:
        raise MalformedLineError(f"line {line_number}: expected two endpoints")
    try:
        return int(tokens[0]), int(tokens[1])
    except ValueError as e:
        raise MalformedLineError(f"line {line_number}: {e}") from e


def parse_edge_list(text: str | TextIO) -> Graph:
    """
    Parse a whitespace-separated edge list.

    Node ids are arbitrary integers, remapped to 0..n-1 in first-seen
    order. Extra columns (e.g. weights) after the two endpoints are
    ignored.

    Args:
        text (str | TextIO): The document or an open text stream.

    Returns:
        Graph: The parsed graph.

    Raises:
        MalformedLineError: If a line does not start with two integers.
        EmptyGraphError: If no node was read.
    """
    node_ids: dict[int, int] = {}
    edges: list[tuple[int, int]] = []

    for line_number, raw_line in enumerate(_lines(text), start=1):
        line = raw_line.strip()
        if not line or line.startswith(EDGE_LIST_COMMENT_PREFIXES):
            continue

        u, v = _parse_endpoints(line.split(), line_number)
        u_id = node_ids.setdefault(u, len(node_ids))
        v_id = node_ids.setdefault(v, len(node_ids))
        edges.append((u_id, v_id))

    if not node_ids:
        raise EmptyGraphError("edge list contains no nodes")

    return Graph.from_edges(len(node_ids), edges)


def serialize_dimacs(graph: Graph, comments: Iterable[str] = ()) -> str:
    """
    Write a graph in DIMACS clique format with 1-based ids.
    """
    lines = [f"c {comment}" for comment in comments]
    lines.append(f"p edge {graph.node_count} {graph.edge_count}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in graph.edges())
    return "\n".join(lines) + "\n"


def load_graph(path: Path, encoding: str = "utf-8") -> Graph:
    """DIMACS for .clq, .col and .dimacs files, an edge list otherwise."""
    with path.open(encoding=encoding) as handle:
        if path.suffix.lower() in DIMACS_SUFFIXES:
            return parse_dimacs_clq(handle)
        return parse_edge_list(handle)
