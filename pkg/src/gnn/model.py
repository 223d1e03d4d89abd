"""
GAT-MLP forward and backward passes.

The structure encoder runs two attention layers over the min-max scaled
node features and mean-pools the node embeddings; the statistical encoder
is a two-layer ReLU MLP on the z-scored global features. Their outputs
are concatenated and projected to one logit per solver.
"""

import numpy as np
import numpy.typing as npt
from pydantic import BaseModel, ConfigDict, Field

from src.errors import ShapeMismatchError
from src.gnn.layers import LayerCache, MessageEdges, elu, elu_grad, layer_backward, layer_forward
from src.gnn.loss import loss, loss_gradient
from src.gnn.params import Blocks, LossMode, ModelParams
from src.graph.models import Graph

Array = npt.NDArray[np.float64]


class GraphSample(BaseModel):
    """
    One model input: message edges, scaled node features and scaled
    global features of a graph.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    edges: MessageEdges | None
    node_x: Array
    global_x: Array


class ForwardCache(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    sample: GraphSample
    layer1: LayerCache | None = None
    pre_elu: Array | None = None
    layer2: LayerCache | None = None
    mlp_pre1: Array | None = None
    mlp_mask: Array | None = None
    mlp_hidden: Array | None = None
    mlp_pre2: Array | None = None
    fused: Array = Field(default_factory=lambda: np.zeros(0))


def _structure_forward(params: ModelParams, sample: GraphSample, cache: ForwardCache) -> Array:
    h1, cache.layer1 = layer_forward(sample.node_x, sample.edges, params.gat_layer(1))
    cache.pre_elu = h1
    h2, cache.layer2 = layer_forward(elu(h1), sample.edges, params.gat_layer(2))
    return h2.mean(axis=0)


def _stat_forward(
    params: ModelParams,
    x: Array,
    cache: ForwardCache,
    dropout: float,
    rng: np.random.Generator | None,
) -> Array:
    if x.shape != (params.shape.global_features,):
        raise ShapeMismatchError(
            f"expected {params.shape.global_features} global features, got shape {x.shape}"
        )
    b = params.blocks
    cache.mlp_pre1 = x @ b["mlp.W1"] + b["mlp.b1"]
    hidden = np.maximum(cache.mlp_pre1, 0.0)
    if rng is not None and dropout > 0:
        cache.mlp_mask = (rng.random(hidden.shape) >= dropout) / (1.0 - dropout)
        hidden = hidden * cache.mlp_mask
    cache.mlp_hidden = hidden
    cache.mlp_pre2 = hidden @ b["mlp.W2"] + b["mlp.b2"]
    return np.maximum(cache.mlp_pre2, 0.0)


def forward(
    params: ModelParams,
    sample: GraphSample,
    dropout: float = 0.0,
    rng: np.random.Generator | None = None,
) -> tuple[Array, ForwardCache]:
    """
    Logits of one graph.

    Args:
        params (ModelParams): Model parameters.
        sample (GraphSample): The scaled inputs.
        dropout (float): Dropout rate of the MLP branch.
        rng (np.random.Generator | None): Dropout generator; dropout is
            disabled when None (evaluation mode).

    Returns:
        tuple[Array, ForwardCache]: The C logits and the forward cache.
    """
    cache = ForwardCache(sample=sample)
    parts = []
    if params.shape.uses_structure:
        parts.append(_structure_forward(params, sample, cache))
    if params.shape.stat_encoder:
        parts.append(_stat_forward(params, sample.global_x, cache, dropout, rng))
    cache.fused = np.concatenate(parts)
    logits = cache.fused @ params.blocks["clf.W"] + params.blocks["clf.b"]
    return logits, cache


def backward(params: ModelParams, cache: ForwardCache, d_logits: Array, grads: Blocks):
    """
    Accumulate the gradients of one graph's logits into grads.
    """
    b = params.blocks
    grads["clf.W"] += np.outer(cache.fused, d_logits)
    grads["clf.b"] += d_logits
    d_fused = b["clf.W"] @ d_logits

    h = params.shape.hidden_dim
    offset = 0
    if params.shape.uses_structure:
        d_struct = d_fused[offset : offset + h]
        offset += h
        n = cache.sample.edges.node_count
        d_h2 = np.tile(d_struct / n, (n, 1))
        d_a1, layer2_grads = layer_backward(
            d_h2, cache.sample.edges, params.gat_layer(2), cache.layer2
        )
        d_h1 = d_a1 * elu_grad(cache.pre_elu)
        _, layer1_grads = layer_backward(
            d_h1, cache.sample.edges, params.gat_layer(1), cache.layer1
        )
        for layer, layer_grads in ((1, layer1_grads), (2, layer2_grads)):
            for name, grad in layer_grads.items():
                grads[f"gat{layer}.{name}"] += grad

    if params.shape.stat_encoder:
        d_stat = d_fused[offset : offset + h]
        d_pre2 = d_stat * (cache.mlp_pre2 > 0)
        grads["mlp.W2"] += np.outer(cache.mlp_hidden, d_pre2)
        grads["mlp.b2"] += d_pre2
        d_hidden = b["mlp.W2"] @ d_pre2
        if cache.mlp_mask is not None:
            d_hidden = d_hidden * cache.mlp_mask
        d_pre1 = d_hidden * (cache.mlp_pre1 > 0)
        grads["mlp.W1"] += np.outer(cache.sample.global_x, d_pre1)
        grads["mlp.b1"] += d_pre1


def batch_loss_and_gradients(
    params: ModelParams,
    samples: list[GraphSample],
    targets: npt.ArrayLike,
    mode: LossMode,
    dropout: float = 0.0,
    rng: np.random.Generator | None = None,
) -> tuple[float, Blocks]:
    """
    Mean loss of a batch and its exact gradient for every parameter block.

    Args:
        params (ModelParams): Model parameters.
        samples (list[GraphSample]): The batch.
        targets (npt.ArrayLike): Class indices or 0/1 target rows.
        mode (LossMode): Loss mode.
        dropout (float): Dropout rate of the MLP branch.
        rng (np.random.Generator | None): Dropout generator, None disables it.

    Returns:
        tuple[float, Blocks]: Loss and gradients.
    """
    results = [forward(params, sample, dropout, rng) for sample in samples]
    logits = np.stack([logit for logit, _ in results])
    value = loss(logits, targets, mode)
    d_logits = loss_gradient(logits, targets, mode)

    grads = params.zeros_like()
    for (_, cache), d_row in zip(results, d_logits, strict=True):
        backward(params, cache, d_row, grads)
    return value, grads


def predict_logits(params: ModelParams, samples: list[GraphSample]) -> Array:
    return np.stack([forward(params, sample)[0] for sample in samples])


def structure_encoder_forward(g: Graph, x_norm: npt.ArrayLike, params: ModelParams) -> Array:
    """
    Pooled structural embedding z_struct of length h.

    Raises:
        EmptyGraphError: If g has no nodes.
    """
    sample = GraphSample(
        edges=MessageEdges.from_graph(g),
        node_x=np.asarray(x_norm, dtype=np.float64),
        global_x=np.zeros(params.shape.global_features),
    )
    return _structure_forward(params, sample, ForwardCache(sample=sample))


def stat_encoder_forward(
    global_x: npt.ArrayLike,
    params: ModelParams,
    train_mode: bool = False,
    dropout: float = 0.0,
    rng: np.random.Generator | None = None,
) -> Array:
    """
    Statistical embedding z_stat of length h; dropout only in train_mode.
    """
    x = np.asarray(global_x, dtype=np.float64)
    cache = ForwardCache(sample=GraphSample(edges=None, node_x=np.zeros((0, 0)), global_x=x))
    if not train_mode:
        dropout, rng = 0.0, None
    elif rng is None:
        rng = np.random.default_rng()
    return _stat_forward(params, x, cache, dropout, rng)


def fuse_and_classify(
    z_struct: npt.ArrayLike | None, z_stat: npt.ArrayLike | None, params: ModelParams
) -> Array:
    """
    Concatenate the enabled embeddings and project them to C logits.

    Raises:
        ShapeMismatchError: If an embedding does not have length h.
    """
    h = params.shape.hidden_dim
    parts = []
    for enabled, z in ((params.shape.uses_structure, z_struct), (params.shape.stat_encoder, z_stat)):
        if not enabled:
            continue
        vector = np.asarray(z, dtype=np.float64)
        if vector.shape != (h,):
            raise ShapeMismatchError(f"embedding of shape {vector.shape}, expected ({h},)")
        parts.append(vector)
    return np.concatenate(parts) @ params.blocks["clf.W"] + params.blocks["clf.b"]
