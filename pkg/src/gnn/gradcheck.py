"""
Central finite-difference check of the GAT-MLP gradients.
"""

import numpy as np
from pydantic import BaseModel

from src.gnn.layers import MessageEdges
from src.gnn.model import GraphSample, batch_loss_and_gradients
from src.gnn.params import Blocks, LossMode, ModelParams, ModelShape, StructureMode, init_params
from src.graph.models import Graph
from src.solvers.models import SolverId

# block relative errors below this norm are measured absolutely
NORM_FLOOR = 1e-6


class GradientCheckResult(BaseModel):
    seed: int
    block_errors: dict[str, float]

    @property
    def max_error(self) -> float:
        return max(self.block_errors.values())


def random_graph(nodes: int, rng: np.random.Generator, density: float = 0.5) -> Graph:
    pairs = [(u, v) for u in range(nodes) for v in range(u + 1, nodes)]
    keep = rng.random(len(pairs)) < density
    return Graph.from_edges(nodes, [pair for pair, kept in zip(pairs, keep) if kept])


def random_sample(rng: np.random.Generator, shape: ModelShape, nodes: int = 6) -> GraphSample:
    g = random_graph(nodes, rng)
    return GraphSample(
        edges=MessageEdges.from_graph(g),
        node_x=rng.random((nodes, shape.node_features)),
        global_x=rng.standard_normal(shape.global_features),
    )


def numeric_gradients(
    params: ModelParams,
    samples: list[GraphSample],
    targets: np.ndarray,
    mode: LossMode,
    step: float,
) -> Blocks:
    grads = params.zeros_like()
    for name, block in params.blocks.items():
        flat = block.reshape(-1)
        out = grads[name].reshape(-1)
        for i in range(flat.size):
            original = flat[i]
            flat[i] = original + step
            plus, _ = batch_loss_and_gradients(params, samples, targets, mode)
            flat[i] = original - step
            minus, _ = batch_loss_and_gradients(params, samples, targets, mode)
            flat[i] = original
            out[i] = (plus - minus) / (2 * step)
    return grads


def relative_error(analytic: np.ndarray, numeric: np.ndarray) -> float:
    scale = max(np.linalg.norm(analytic) + np.linalg.norm(numeric), NORM_FLOOR)
    return float(np.linalg.norm(analytic - numeric) / scale)


def gradient_check(
    seed: int,
    hidden_dim: int = 4,
    heads: int = 2,
    nodes: int = 6,
    batch: int = 2,
    mode: LossMode = LossMode.SOFTMAX,
    structure_mode: StructureMode = StructureMode.ATTENTION,
    stat_encoder: bool = True,
    step: float = 1e-5,
) -> GradientCheckResult:
    """
    Compare the analytic gradients of a random model on random graphs with
    central differences. Dropout stays disabled.

    Args:
        seed (int): Seed of the model, graphs, features and targets.
        hidden_dim (int): Hidden size.
        heads (int): Attention heads of the first layer.
        nodes (int): Nodes per random graph.
        batch (int): Graphs in the batch.
        mode (LossMode): Loss mode.
        structure_mode (StructureMode): Structure encoder mode.
        stat_encoder (bool): Whether the statistical encoder is used.
        step (float): Finite-difference step.

    Returns:
        GradientCheckResult: Relative error per parameter block.
    """
    rng = np.random.default_rng(seed)
    shape = ModelShape(
        hidden_dim=hidden_dim,
        heads=heads,
        structure_mode=structure_mode,
        stat_encoder=stat_encoder,
    )
    params = init_params(shape, seed)
    samples = [random_sample(rng, shape, nodes) for _ in range(batch)]
    if mode == LossMode.SOFTMAX:
        targets = rng.integers(len(SolverId), size=batch)
    else:
        targets = (rng.random((batch, len(SolverId))) < 0.5).astype(np.float64)

    _, analytic = batch_loss_and_gradients(params, samples, targets, mode)
    numeric = numeric_gradients(params, samples, targets, mode, step)
    return GradientCheckResult(
        seed=seed,
        block_errors={
            name: relative_error(analytic[name], numeric[name]) for name in params.blocks
        },
    )
