"""
Graph attention layer with exact backward pass.

Messages flow along the edges of the graph plus one self-loop per node;
node u aggregates W x_v over v in N(u) and u itself, weighted by a softmax
of LeakyReLU(a_dst . W x_u + a_src . W x_v) over that neighborhood, or
uniformly in mean-aggregation mode.
"""

from typing import Self

import numpy as np
import numpy.typing as npt
from pydantic import BaseModel, ConfigDict
from scipy import sparse

from src.errors import EmptyGraphError, ShapeMismatchError
from src.gnn.params import GatLayerParams
from src.graph.models import Graph

Array = npt.NDArray[np.float64]


class MessageEdges(BaseModel):
    """
    Directed message edges sorted by receiving node, self-loops included.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    src: npt.NDArray[np.int64]
    dst: npt.NDArray[np.int64]
    node_count: int

    @classmethod
    def from_graph(cls, g: Graph) -> Self:
        if g.node_count == 0:
            raise EmptyGraphError("message passing needs at least one node")
        src, dst = [], []
        for u in range(g.node_count):
            for v in sorted(g.neighbor_sets[u] | {u}):
                dst.append(u)
                src.append(v)
        return cls(
            src=np.asarray(src, dtype=np.int64),
            dst=np.asarray(dst, dtype=np.int64),
            node_count=g.node_count,
        )

    @property
    def in_degree(self) -> npt.NDArray[np.int64]:
        return np.bincount(self.dst, minlength=self.node_count)


class LayerCache(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    x: Array
    z: Array  # (H, n, out)
    alpha: Array  # (H, E)
    raw: Array | None  # pre-activation attention scores, attention mode only
    adjacency: list[sparse.csr_matrix]


def leaky_relu(x: Array, slope: float) -> Array:
    return np.where(x > 0, x, slope * x)


def leaky_relu_grad(x: Array, slope: float) -> Array:
    return np.where(x > 0, 1.0, slope)


def elu(x: Array) -> Array:
    return np.where(x > 0, x, np.expm1(np.minimum(x, 0.0)))


def elu_grad(x: Array) -> Array:
    return np.where(x > 0, 1.0, np.exp(np.minimum(x, 0.0)))


def segment_sum(values: Array, segments: npt.NDArray[np.int64], count: int) -> Array:
    """Sum the last axis of values into count buckets."""
    return np.stack([np.bincount(segments, weights=row, minlength=count) for row in values])


def segment_softmax(scores: Array, segments: npt.NDArray[np.int64], count: int) -> Array:
    """
    Softmax of every row of scores over the entries sharing a segment.
    """
    maxima = np.full((scores.shape[0], count), -np.inf)
    for h in range(scores.shape[0]):
        np.maximum.at(maxima[h], segments, scores[h])
    exps = np.exp(scores - maxima[:, segments])
    return exps / segment_sum(exps, segments, count)[:, segments]


def _check_input(x: Array, edges: MessageEdges, p: GatLayerParams):
    if x.ndim != 2 or x.shape[0] != edges.node_count:
        raise ShapeMismatchError(
            f"node features of shape {x.shape} for {edges.node_count} nodes"
        )
    if x.shape[1] != p.W.shape[1]:
        raise ShapeMismatchError(
            f"layer expects {p.W.shape[1]} input features, got {x.shape[1]}"
        )


def layer_forward(x: Array, edges: MessageEdges, p: GatLayerParams) -> tuple[Array, LayerCache]:
    """
    Forward pass of one layer; heads are concatenated along the columns.

    Returns:
        tuple[Array, LayerCache]: Output of shape (n, H * head_dim) and the
        quantities the backward pass needs.
    """
    _check_input(x, edges, p)
    n = edges.node_count
    z = np.einsum("ni,hio->hno", x, p.W)

    raw = None
    if p.uses_attention:
        s_dst = np.einsum("hno,ho->hn", z, p.a_dst)
        s_src = np.einsum("hno,ho->hn", z, p.a_src)
        raw = s_dst[:, edges.dst] + s_src[:, edges.src]
        alpha = segment_softmax(leaky_relu(raw, p.negative_slope), edges.dst, n)
    else:
        alpha = np.tile(1.0 / edges.in_degree[edges.dst], (p.heads, 1))

    adjacency = [
        sparse.csr_matrix((alpha[h], (edges.dst, edges.src)), shape=(n, n))
        for h in range(p.heads)
    ]
    out = np.stack([adjacency[h] @ z[h] for h in range(p.heads)])
    concatenated = out.transpose(1, 0, 2).reshape(n, p.heads * p.head_dim)
    return concatenated, LayerCache(x=x, z=z, alpha=alpha, raw=raw, adjacency=adjacency)


def layer_backward(
    d_out: Array, edges: MessageEdges, p: GatLayerParams, cache: LayerCache
) -> tuple[Array, dict[str, Array]]:
    """
    Backward pass of one layer.

    Args:
        d_out (Array): Gradient with respect to the (n, H * head_dim) output.
        edges (MessageEdges): The edges used in the forward pass.
        p (GatLayerParams): Layer parameters.
        cache (LayerCache): Forward quantities.

    Returns:
        tuple[Array, dict[str, Array]]: Gradient with respect to the input
        and gradients of W, a_dst and a_src (the latter two in attention
        mode only).
    """
    n = edges.node_count
    g_out = d_out.reshape(n, p.heads, p.head_dim).transpose(1, 0, 2)
    dz = np.stack([cache.adjacency[h].T @ g_out[h] for h in range(p.heads)])
    grads: dict[str, Array] = {}

    if p.uses_attention:
        d_alpha = np.einsum("heo,heo->he", g_out[:, edges.dst], cache.z[:, edges.src])
        weighted = segment_sum(cache.alpha * d_alpha, edges.dst, n)
        d_scores = cache.alpha * (d_alpha - weighted[:, edges.dst])
        d_raw = d_scores * leaky_relu_grad(cache.raw, p.negative_slope)
        d_s_dst = segment_sum(d_raw, edges.dst, n)
        d_s_src = segment_sum(d_raw, edges.src, n)
        dz += d_s_dst[:, :, None] * p.a_dst[:, None, :]
        dz += d_s_src[:, :, None] * p.a_src[:, None, :]
        grads["a_dst"] = np.einsum("hn,hno->ho", d_s_dst, cache.z)
        grads["a_src"] = np.einsum("hn,hno->ho", d_s_src, cache.z)

    grads["W"] = np.einsum("ni,hno->hio", cache.x, dz)
    dx = np.einsum("hno,hio->ni", dz, p.W)
    return dx, grads


def gat_layer_forward(x: npt.ArrayLike, g: Graph, p: GatLayerParams) -> Array:
    """
    Apply one attention layer to the node features of g.

    Raises:
        ShapeMismatchError: If x does not have one row per node and the
            layer's input width.
    """
    out, _ = layer_forward(np.asarray(x, dtype=np.float64), MessageEdges.from_graph(g), p)
    return out


def attention_weights(x: npt.ArrayLike, g: Graph, p: GatLayerParams) -> tuple[MessageEdges, Array]:
    """Attention coefficients per head, aligned with the message edges."""
    edges = MessageEdges.from_graph(g)
    _, cache = layer_forward(np.asarray(x, dtype=np.float64), edges, p)
    return edges, cache.alpha
