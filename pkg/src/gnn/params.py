"""
GAT-MLP configuration and parameter blocks.

Parameters live in a flat mapping of named numpy blocks so the optimizer,
the gradient check and the checkpoint can treat them uniformly.
"""

from enum import StrEnum
from typing import Self

import numpy as np
import numpy.typing as npt
from pydantic import BaseModel, ConfigDict, Field

from src.constants import FEATURE_COUNT, NODE_FEATURE_COLUMNS
from src.errors import BothEncodersOffError, ShapeMismatchError
from src.solvers.models import SolverId

Blocks = dict[str, npt.NDArray[np.float64]]


class LossMode(StrEnum):
    SOFTMAX = "softmax"
    SIGMOID = "sigmoid"


class StructureMode(StrEnum):
    ATTENTION = "attention"
    MEAN = "mean"
    OFF = "off"


class AblationVariant(StrEnum):
    """Named encoder combinations compared by the ablation harness."""

    GAT_MLP = "gat-mlp"
    MLP_ONLY = "mlp-only"
    GAT_ONLY = "gat-only"
    GCN_ONLY = "gcn-only"

    @property
    def encoders(self) -> tuple[StructureMode, bool]:
        return {
            AblationVariant.GAT_MLP: (StructureMode.ATTENTION, True),
            AblationVariant.MLP_ONLY: (StructureMode.OFF, True),
            AblationVariant.GAT_ONLY: (StructureMode.ATTENTION, False),
            AblationVariant.GCN_ONLY: (StructureMode.MEAN, False),
        }[self]


class TrainConfig(BaseModel):
    """
    GAT-MLP training configuration.

    Args:
        learning_rate (float): AdamW step size.
        weight_decay (float): Decoupled weight decay.
        hidden_dim (int): Hidden size h of both encoders.
        attention_heads (int): Heads H of the first attention layer.
        dropout (float): Dropout rate between the MLP layers.
        batch_size (int): Instances per optimization step.
        max_epochs (int): Upper bound on training epochs.
        patience (int): Non-improving epochs tolerated before stopping.
        validation_fraction (float): Share of training rows held out.
        seed (int): Seed of initialization, shuffling and dropout.
        loss_mode (LossMode): Softmax cross-entropy or sigmoid BCE.
        structure_mode (StructureMode): Attention, mean aggregation or off.
        stat_encoder (bool): Whether the statistical MLP is used.
        negative_slope (float): LeakyReLU slope of the attention scores.
    """

    learning_rate: float = Field(default=0.001, gt=0)
    weight_decay: float = Field(default=1e-4, ge=0)
    hidden_dim: int = Field(default=32, ge=1)
    attention_heads: int = Field(default=4, ge=1)
    dropout: float = Field(default=0.5, ge=0, lt=1)
    batch_size: int = Field(default=16, ge=1)
    max_epochs: int = Field(default=50, ge=1)
    patience: int = Field(default=10, ge=0)
    validation_fraction: float = Field(default=0.1, ge=0, lt=1)
    seed: int = 0
    loss_mode: LossMode = LossMode.SOFTMAX
    structure_mode: StructureMode = StructureMode.ATTENTION
    stat_encoder: bool = True
    negative_slope: float = Field(default=0.2, ge=0)

    @classmethod
    def for_variant(cls, variant: AblationVariant, **overrides) -> Self:
        structure_mode, stat_encoder = variant.encoders
        return cls(structure_mode=structure_mode, stat_encoder=stat_encoder, **overrides)

    def check_encoders(self):
        """
        Raises:
            BothEncodersOffError: If neither encoder is enabled.
        """
        if self.structure_mode == StructureMode.OFF and not self.stat_encoder:
            raise BothEncodersOffError("at least one encoder must be enabled")


class ModelShape(BaseModel):
    """
    Dimensions and encoder modes that fix the parameter block shapes.
    """

    node_features: int = len(NODE_FEATURE_COLUMNS)
    global_features: int = FEATURE_COUNT
    hidden_dim: int = Field(..., ge=1)
    heads: int = Field(..., ge=1)
    classes: int = len(SolverId)
    structure_mode: StructureMode = StructureMode.ATTENTION
    stat_encoder: bool = True
    negative_slope: float = 0.2

    @classmethod
    def from_config(cls, cfg: TrainConfig) -> Self:
        cfg.check_encoders()
        return cls(
            hidden_dim=cfg.hidden_dim,
            heads=cfg.attention_heads,
            structure_mode=cfg.structure_mode,
            stat_encoder=cfg.stat_encoder,
            negative_slope=cfg.negative_slope,
        )

    @property
    def uses_structure(self) -> bool:
        return self.structure_mode != StructureMode.OFF

    @property
    def fused_dim(self) -> int:
        return self.hidden_dim * (int(self.uses_structure) + int(self.stat_encoder))

    def block_shapes(self) -> dict[str, tuple[int, ...]]:
        """Shape of every parameter block, in initialization order."""
        h, heads = self.hidden_dim, self.heads
        shapes: dict[str, tuple[int, ...]] = {}
        if self.uses_structure:
            shapes["gat1.W"] = (heads, self.node_features, h)
            if self.structure_mode == StructureMode.ATTENTION:
                shapes["gat1.a_dst"] = (heads, h)
                shapes["gat1.a_src"] = (heads, h)
            shapes["gat2.W"] = (1, heads * h, h)
            if self.structure_mode == StructureMode.ATTENTION:
                shapes["gat2.a_dst"] = (1, h)
                shapes["gat2.a_src"] = (1, h)
        if self.stat_encoder:
            shapes["mlp.W1"] = (self.global_features, h)
            shapes["mlp.b1"] = (h,)
            shapes["mlp.W2"] = (h, h)
            shapes["mlp.b2"] = (h,)
        shapes["clf.W"] = (self.fused_dim, self.classes)
        shapes["clf.b"] = (self.classes,)
        return shapes


class GatLayerParams(BaseModel):
    """
    One attention layer.

    Args:
        W (ndarray): Per-head linear maps, shape (H, in_dim, head_dim).
        a_dst (ndarray | None): Attention weights on the receiving node,
            shape (H, head_dim); None in mean-aggregation mode.
        a_src (ndarray | None): Attention weights on the sending node.
        negative_slope (float): LeakyReLU slope.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True)

    W: np.ndarray
    a_dst: np.ndarray | None = None
    a_src: np.ndarray | None = None
    negative_slope: float = 0.2

    @property
    def heads(self) -> int:
        return self.W.shape[0]

    @property
    def head_dim(self) -> int:
        return self.W.shape[2]

    @property
    def uses_attention(self) -> bool:
        return self.a_dst is not None


class ModelParams(BaseModel):
    """
    All parameter blocks of one GAT-MLP model.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True)

    shape: ModelShape
    blocks: Blocks

    def gat_layer(self, layer: int) -> GatLayerParams:
        prefix = f"gat{layer}."
        return GatLayerParams(
            W=self.blocks[prefix + "W"],
            a_dst=self.blocks.get(prefix + "a_dst"),
            a_src=self.blocks.get(prefix + "a_src"),
            negative_slope=self.shape.negative_slope,
        )

    def copy(self) -> "ModelParams":
        return ModelParams(
            shape=self.shape,
            blocks={name: block.copy() for name, block in self.blocks.items()},
        )

    def zeros_like(self) -> Blocks:
        return {name: np.zeros_like(block) for name, block in self.blocks.items()}

    def check_shapes(self):
        """
        Raises:
            ShapeMismatchError: If a block is missing or misshapen.
        """
        expected = self.shape.block_shapes()
        if set(expected) != set(self.blocks):
            raise ShapeMismatchError(
                f"parameter blocks {sorted(self.blocks)} do not match {sorted(expected)}"
            )
        for name, shape in expected.items():
            if self.blocks[name].shape != shape:
                raise ShapeMismatchError(
                    f"block {name} has shape {self.blocks[name].shape}, expected {shape}"
                )


def init_params(shape: ModelShape, seed: int) -> ModelParams:
    """
    Draw weights uniformly in +-1/sqrt(fan_in); biases start at zero.

    Args:
        shape (ModelShape): Model dimensions.
        seed (int): Seed of the draw.

    Returns:
        ModelParams: Freshly initialized parameters.
    """
    rng = np.random.default_rng(seed)
    blocks: Blocks = {}
    for name, block_shape in shape.block_shapes().items():
        if name.endswith((".b", ".b1", ".b2")):
            blocks[name] = np.zeros(block_shape)
            continue
        # weights are (in, out) or (heads, in, out); attention vectors (heads, dim)
        fan_in = block_shape[-2] if len(block_shape) >= 2 and ".W" in name else block_shape[-1]
        bound = 1.0 / np.sqrt(fan_in)
        blocks[name] = rng.uniform(-bound, bound, size=block_shape)
    return ModelParams(shape=shape, blocks=blocks)
