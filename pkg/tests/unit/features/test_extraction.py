import math
import random

import networkx as nx
import numpy as np
import pytest

from src.constants import FEATURE_COLUMNS
from src.errors import EmptyGraphError, NodeOutOfRangeError
from src.features.extraction import (
    assortativity_with_flag,
    avg_local_clustering,
    extract_global,
    global_clustering,
    local_clustering,
    node_features,
)
from src.graph.models import Graph
from tests.conftest import complete, from_networkx, to_networkx


@pytest.fixture
def random_graphs():
    """Forty seeded graphs with n <= 60 and mixed densities."""
    rng = random.Random(5)
    graphs = []
    for _ in range(40):
        n = rng.randint(2, 60)
        p = rng.choice([0.05, 0.2, 0.5, 0.9])
        graphs.append(from_networkx(nx.gnp_random_graph(n, p, seed=rng.randint(0, 10**6))))
    return graphs


def brute_force_features(g: Graph) -> dict[str, float]:
    nx_graph = to_networkx(g)
    n, m = g.node_count, g.edge_count
    per_edge = [len(set(nx_graph[u]) & set(nx_graph[v])) for u, v in nx_graph.edges]
    triangles = sum(nx.triangles(nx_graph).values()) // 3
    return {
        "V": n,
        "E": m,
        "d_max": max(dict(nx_graph.degree).values()),
        "d_avg": 2 * m / n,
        "D": nx.density(nx_graph),
        "T": triangles,
        "T_avg": sum(per_edge) / m if m else 0.0,
        "T_max": max(per_edge, default=0),
        "kappa_avg": nx.average_clustering(nx_graph),
        "kappa": nx.transitivity(nx_graph),
        "K": max(nx.core_number(nx_graph).values()),
    }


def test_features_match_oracles(random_graphs):
    for g in random_graphs:
        features = extract_global(g)
        expected = brute_force_features(g)

        for name, value in expected.items():
            assert getattr(features, name) == pytest.approx(value, abs=1e-9), name


def test_assortativity_matches_networkx(random_graphs):
    for g in random_graphs:
        r, degenerate = assortativity_with_flag(g)
        if degenerate:
            assert r == 0.0
            continue

        assert r == pytest.approx(
            nx.degree_assortativity_coefficient(to_networkx(g)), abs=1e-9
        )


def test_complete_graph_features():
    features = extract_global(complete(5))

    assert (features.V, features.E, features.d_max, features.K) == (5, 10, 4, 4)
    assert features.D == 1.0
    assert features.T == 10
    assert features.T_max == 3
    assert features.kappa == 1.0
    assert features.kappa_avg == 1.0
    assert features.r_degenerate
    assert features.r == 0.0


def test_star_is_disassortative(star5):
    features = extract_global(star5)

    assert features.r == pytest.approx(-1.0)
    assert features.T == 0
    assert features.kappa == 0.0


def test_edgeless_graph(edgeless5):
    features = extract_global(edgeless5)

    assert (features.E, features.d_max, features.T, features.K) == (0, 0, 0, 0)
    assert features.D == 0.0
    assert features.T_avg == 0.0
    assert features.r_degenerate


def test_single_node_graph():
    features = extract_global(Graph.from_edges(1, []))

    assert features.V == 1
    assert features.D == 0.0


def test_empty_graph_raises():
    with pytest.raises(EmptyGraphError):
        extract_global(Graph.from_edges(0, []))


def test_features_are_permutation_invariant(random_graphs):
    rng = random.Random(8)
    for g in random_graphs[:20]:
        permutation = list(range(g.node_count))
        rng.shuffle(permutation)

        assert extract_global(g.relabel(permutation)) == extract_global(g)


def test_local_clustering(diamond, p3):
    assert local_clustering(diamond, 0) == pytest.approx(2 / 3)
    assert local_clustering(diamond, 2) == 1.0
    assert local_clustering(p3, 0) == 0.0


def test_local_clustering_out_of_range(k3):
    with pytest.raises(NodeOutOfRangeError):
        local_clustering(k3, 7)


def test_clustering_helpers_match_features(petersen):
    features = extract_global(petersen)

    assert avg_local_clustering(petersen) == features.kappa_avg
    assert global_clustering(petersen) == features.kappa


def test_as_vector_column_order(diamond):
    features = extract_global(diamond)

    vector = features.as_vector()

    assert vector.shape == (len(FEATURE_COLUMNS),)
    assert vector.tolist() == [float(getattr(features, name)) for name in FEATURE_COLUMNS]


def test_node_features(two_k4_bridged):
    rows = node_features(two_k4_bridged)

    assert rows.shape == (8, 2)
    assert rows[:, 0].tolist() == [3, 3, 3, 4, 4, 3, 3, 3]
    assert np.all(rows[:, 1] == 3)


def test_clique_core_gap_is_zero_on_complete_graphs():
    for n in range(2, 11):
        features = extract_global(complete(n))

        assert features.K + 1 - n == 0
        assert math.isclose(features.D, 1.0)
