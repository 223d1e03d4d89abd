from src.gnn.ablation import AblationRow, run_ablation
from src.gnn.gradcheck import GradientCheckResult, gradient_check
from src.gnn.layers import MessageEdges, attention_weights, gat_layer_forward
from src.gnn.loss import loss, loss_gradient
from src.gnn.model import (
    GraphSample,
    backward,
    batch_loss_and_gradients,
    forward,
    fuse_and_classify,
    stat_encoder_forward,
    structure_encoder_forward,
)
from src.gnn.optim import AdamW
from src.gnn.params import (
    AblationVariant,
    GatLayerParams,
    LossMode,
    ModelParams,
    ModelShape,
    StructureMode,
    TrainConfig,
    init_params,
)
from src.gnn.selector import GatMlpSelector, load_gat_selector, save_gat_selector
from src.gnn.training import EpochLog, TrainingResult, train, write_training_log

__all__ = [
    "AblationRow",
    "AblationVariant",
    "AdamW",
    "EpochLog",
    "GatLayerParams",
    "GatMlpSelector",
    "GradientCheckResult",
    "GraphSample",
    "LossMode",
    "MessageEdges",
    "ModelParams",
    "ModelShape",
    "StructureMode",
    "TrainConfig",
    "TrainingResult",
    "attention_weights",
    "backward",
    "batch_loss_and_gradients",
    "forward",
    "fuse_and_classify",
    "gat_layer_forward",
    "gradient_check",
    "init_params",
    "load_gat_selector",
    "loss",
    "loss_gradient",
    "run_ablation",
    "save_gat_selector",
    "stat_encoder_forward",
    "structure_encoder_forward",
    "train",
    "write_training_log",
]
