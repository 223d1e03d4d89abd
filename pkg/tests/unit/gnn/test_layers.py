import random

import networkx as nx
import numpy as np
import pytest

from src.errors import EmptyGraphError, ShapeMismatchError
from src.gnn.layers import MessageEdges, attention_weights, gat_layer_forward
from src.gnn.model import structure_encoder_forward
from src.gnn.params import GatLayerParams, ModelShape, StructureMode, init_params
from src.graph.models import Graph
from tests.conftest import from_networkx


@pytest.fixture
def layer():
    """Three heads of width 5 over the two node features."""
    rng = np.random.default_rng(3)
    return GatLayerParams(
        W=rng.normal(size=(3, 2, 5)),
        a_dst=rng.normal(size=(3, 5)),
        a_src=rng.normal(size=(3, 5)),
    )


def test_message_edges_add_self_loops(diamond):
    edges = MessageEdges.from_graph(diamond)

    assert len(edges.src) == 2 * diamond.edge_count + diamond.node_count
    assert edges.in_degree.tolist() == [4, 4, 3, 3]
    assert np.all(np.diff(edges.dst) >= 0)


def test_message_edges_need_nodes():
    with pytest.raises(EmptyGraphError):
        MessageEdges.from_graph(Graph.from_edges(0, []))


def test_attention_is_a_distribution_per_node(petersen, layer):
    x = np.random.default_rng(1).random((10, 2))

    edges, alpha = attention_weights(x, petersen, layer)

    assert alpha.shape == (3, len(edges.src))
    for h in range(3):
        totals = np.bincount(edges.dst, weights=alpha[h], minlength=10)
        assert np.allclose(totals, 1.0)
    assert np.all(alpha > 0)


def test_layer_output_concatenates_heads(petersen, layer):
    out = gat_layer_forward(np.ones((10, 2)), petersen, layer)

    assert out.shape == (10, 15)


def test_mean_mode_averages_the_closed_neighborhood(p3):
    W = np.eye(2)[None, :, :]
    x = np.array([[1.0, 0.0], [0.0, 1.0], [4.0, 4.0]])

    out = gat_layer_forward(x, p3, GatLayerParams(W=W))

    assert np.allclose(out[0], [0.5, 0.5])
    assert np.allclose(out[1], [5 / 3, 5 / 3])
    assert np.allclose(out[2], [2.0, 2.5])


def test_layer_rejects_misshapen_input(petersen, layer):
    with pytest.raises(ShapeMismatchError):
        gat_layer_forward(np.ones((9, 2)), petersen, layer)
    with pytest.raises(ShapeMismatchError):
        gat_layer_forward(np.ones((10, 3)), petersen, layer)


@pytest.mark.parametrize("mode", [StructureMode.ATTENTION, StructureMode.MEAN])
def test_structure_encoder_is_permutation_invariant(mode):
    params = init_params(ModelShape(hidden_dim=6, heads=2, structure_mode=mode), seed=2)
    rng = random.Random(4)
    for _ in range(5):
        g = from_networkx(nx.gnp_random_graph(12, 0.4, seed=rng.randint(0, 1000)))
        x = np.random.default_rng(rng.randint(0, 1000)).random((12, 2))
        permutation = list(range(12))
        rng.shuffle(permutation)
        permuted_x = np.empty_like(x)
        permuted_x[permutation] = x

        original = structure_encoder_forward(g, x, params)
        permuted = structure_encoder_forward(g.relabel(permutation), permuted_x, params)

        assert original.shape == (6,)
        assert np.allclose(original, permuted)
