import random

import pytest

from src.errors import (
    EmptyGraphError,
    MalformedHeaderError,
    MalformedLineError,
    NodeOutOfRangeError,
)
from src.graph.parser import load_graph, parse_dimacs_clq, parse_edge_list, serialize_dimacs
from tests.conftest import ASSETS


def test_parse_dimacs_triangle():
    g = parse_dimacs_clq("c a triangle\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n")

    assert g.node_count == 3
    assert g.edge_count == 3
    assert g.adjacency == ((1, 2), (0, 2), (0, 1))


def test_parse_dimacs_collapses_duplicates_and_self_loops():
    g = parse_dimacs_clq("p edge 3 4\ne 1 2\ne 2 1\ne 1 2\ne 3 3\n")

    assert g.edge_count == 1
    assert g.adjacency == ((1,), (0,), ())


def test_parse_dimacs_accepts_col_format_word():
    g = parse_dimacs_clq("p col 2 1\ne 1 2\n")

    assert g.edge_count == 1


def test_parse_dimacs_isolated_nodes_are_kept():
    g = parse_dimacs_clq("p edge 5 1\ne 1 2\n")

    assert g.node_count == 5
    assert [g.degree(v) for v in range(5)] == [1, 1, 0, 0, 0]


def test_parse_dimacs_edge_before_header():
    with pytest.raises(MalformedHeaderError):
        parse_dimacs_clq("e 1 2\np edge 2 1\n")


def test_parse_dimacs_missing_header():
    with pytest.raises(MalformedHeaderError):
        parse_dimacs_clq("c only a comment\n")


def test_parse_dimacs_bad_header():
    with pytest.raises(MalformedHeaderError):
        parse_dimacs_clq("p edge three 2\n")


def test_parse_dimacs_endpoint_out_of_range():
    with pytest.raises(NodeOutOfRangeError):
        parse_dimacs_clq("p edge 3 1\ne 1 4\n")


def test_parse_dimacs_non_integer_endpoint():
    with pytest.raises(MalformedLineError):
        parse_dimacs_clq("p edge 3 1\ne 1 x\n")


def test_parse_dimacs_zero_nodes():
    with pytest.raises(EmptyGraphError):
        parse_dimacs_clq("p edge 0 0\n")


def test_parse_edge_list_remaps_ids_in_first_seen_order():
    g = parse_edge_list("% comment\n# another\n10 20 0.5\n20 30\n")

    assert g.node_count == 3
    assert list(g.edges()) == [(0, 1), (1, 2)]


def test_parse_edge_list_empty():
    with pytest.raises(EmptyGraphError):
        parse_edge_list("% nothing here\n")


def test_serialize_round_trip_on_random_graphs():
    rng = random.Random(3)
    for _ in range(20):
        n = rng.randint(1, 15)
        text = "".join(
            f"e {u} {v}\n" for u in range(1, n + 1) for v in range(u + 1, n + 1) if rng.random() < 0.4
        )
        g = parse_dimacs_clq(f"p edge {n} {text.count('e ')}\n{text}")

        again = parse_dimacs_clq(serialize_dimacs(g))

        assert again.node_count == g.node_count
        assert again.adjacency == g.adjacency


def test_serialize_writes_comments_and_one_based_ids(k3):
    text = serialize_dimacs(k3, comments=["family=test"])

    assert text.splitlines() == ["c family=test", "p edge 3 3", "e 1 2", "e 1 3", "e 2 3"]


def test_load_graph_dispatches_on_suffix():
    k4 = load_graph(ASSETS / "graphs" / "k4.clq")
    diamond = load_graph(ASSETS / "graphs" / "diamond.edges")

    assert (k4.node_count, k4.edge_count) == (4, 6)
    assert (diamond.node_count, diamond.edge_count) == (4, 5)


def test_load_graph_broken_file():
    with pytest.raises(MalformedLineError):
        load_graph(ASSETS / "graphs" / "broken.clq")
