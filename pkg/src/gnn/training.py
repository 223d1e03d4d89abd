"""
GAT-MLP training loop.

Mini-batch AdamW with early stopping on validation macro F1; the
parameters of the best validation epoch are returned.
"""

from collections.abc import Sequence
from pathlib import Path

import numpy as np
import numpy.typing as npt
import pandas as pd
from pydantic import BaseModel, ConfigDict

from src.constants import NODE_FEATURE_COLUMNS, TRAINING_LOG_COLUMNS
from src.errors import DatasetIoError, EmptyDataError, SingleClassError
from src.evaluation.metrics import confusion, macro_f1, multilabel_summary
from src.features.extraction import node_features
from src.features.models import MinMaxNormalizer, ZScoreNormalizer
from src.features.normalization import fit_node_normalizer
from src.gnn.layers import MessageEdges
from src.gnn.loss import predict_classes, predict_label_sets
from src.gnn.model import GraphSample, batch_loss_and_gradients, predict_logits
from src.gnn.optim import AdamW
from src.gnn.params import LossMode, ModelParams, ModelShape, TrainConfig, init_params
from src.graph.models import Graph
from src.solvers.models import SolverId
from src.utils.logger import Logger


class EpochLog(BaseModel):
    epoch: int
    train_loss: float
    val_accuracy: float
    val_macro_f1: float


class TrainingResult(BaseModel):
    """
    Args:
        params (ModelParams): Parameters of the best validation epoch.
        best_epoch (int): That epoch (1-based).
        best_val_macro_f1 (float): Its validation macro F1.
        log (list[EpochLog]): One entry per completed epoch.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True)

    params: ModelParams
    best_epoch: int
    best_val_macro_f1: float
    log: list[EpochLog]


def fit_input_normalizers(
    graphs: Sequence[Graph] | None, global_rows: npt.ArrayLike
) -> tuple[MinMaxNormalizer, ZScoreNormalizer]:
    """
    Fit the node min-max normalizer over every node of the training graphs
    and the global z-score normalizer over their feature rows.

    Without graphs the node normalizer maps every column to 0.
    """
    if graphs is None:
        blank = [0.0] * len(NODE_FEATURE_COLUMNS)
        return MinMaxNormalizer(x_min=blank, x_max=blank), ZScoreNormalizer.fit(global_rows)
    node_normalizer = fit_node_normalizer([node_features(g) for g in graphs])
    return node_normalizer, ZScoreNormalizer.fit(global_rows)


def make_sample(
    g: Graph | None,
    global_row: npt.ArrayLike,
    node_normalizer: MinMaxNormalizer,
    stat_normalizer: ZScoreNormalizer,
) -> GraphSample:
    global_x = stat_normalizer.transform(np.atleast_2d(global_row))[0]
    if g is None:
        # statistics-only input
        return GraphSample(
            edges=None, node_x=np.zeros((0, len(NODE_FEATURE_COLUMNS))), global_x=global_x
        )
    return GraphSample(
        edges=MessageEdges.from_graph(g),
        node_x=node_normalizer.transform(node_features(g)),
        global_x=global_x,
    )


def evaluate_logits(
    logits: npt.NDArray[np.float64], targets: npt.NDArray, mode: LossMode
) -> tuple[float, float]:
    """
    Accuracy and macro F1 of logits; under the sigmoid loss a row counts as
    correct only when its predicted label set matches exactly.
    """
    classes = len(SolverId)
    if mode == LossMode.SOFTMAX:
        predicted = predict_classes(logits)
        return float(np.mean(predicted == targets)), macro_f1(
            confusion(targets, predicted, classes)
        )
    chosen = predict_label_sets(logits)
    truth = targets.astype(bool)
    exact = float(np.mean(np.all(chosen == truth, axis=1)))
    per_label = [confusion(truth[:, c], chosen[:, c], 2) for c in range(classes)]
    return exact, multilabel_summary(per_label)[1]


def _check_targets(targets: npt.NDArray, mode: LossMode):
    if len(targets) == 0:
        raise EmptyDataError("no training instances")
    distinct = len(np.unique(targets, axis=0)) if mode == LossMode.SIGMOID else len(set(targets.tolist()))
    if distinct < 2:
        raise SingleClassError("training data holds a single class")


def train(
    samples: Sequence[GraphSample],
    targets: npt.ArrayLike,
    cfg: TrainConfig,
    logger: Logger,
) -> TrainingResult:
    """
    Train a GAT-MLP from scratch.

    A validation share of cfg.validation_fraction is carved out of the
    samples; when it rounds to zero rows the training rows double as
    validation rows. Training stops once the validation macro F1 has not
    improved for more than cfg.patience epochs or validation accuracy
    reaches 1.

    Args:
        samples (Sequence[GraphSample]): Scaled inputs.
        targets (npt.ArrayLike): Class indices (softmax loss) or 0/1 rows
            (sigmoid loss).
        cfg (TrainConfig): Training configuration.
        logger (Logger): The logger.

    Returns:
        TrainingResult: Best checkpoint and training log.

    Raises:
        EmptyDataError: If there are no samples.
        SingleClassError: If the training rows hold a single class.
        BothEncodersOffError: If both encoders are disabled.
    """
    dtype = np.int64 if cfg.loss_mode == LossMode.SOFTMAX else np.float64
    targets = np.asarray(targets, dtype=dtype)
    if len(samples) != len(targets):
        raise EmptyDataError(f"{len(samples)} samples but {len(targets)} targets")

    split_seed, train_seed = np.random.SeedSequence(cfg.seed).spawn(2)
    order = np.random.default_rng(split_seed).permutation(len(samples))
    n_val = int(np.floor(cfg.validation_fraction * len(samples) + 1e-9))
    val_idx, train_idx = order[:n_val], order[n_val:]
    if n_val == 0:
        val_idx = train_idx
    _check_targets(targets[train_idx], cfg.loss_mode)

    params = init_params(ModelShape.from_config(cfg), cfg.seed)
    optimizer = AdamW(cfg.learning_rate, cfg.weight_decay)
    rng = np.random.default_rng(train_seed)
    val_samples = [samples[i] for i in val_idx]

    best = params.copy()
    best_epoch, best_f1, stale = 0, -np.inf, 0
    log: list[EpochLog] = []

    for epoch in range(1, cfg.max_epochs + 1):
        shuffled = rng.permutation(train_idx)
        loss_total = 0.0
        for start in range(0, len(shuffled), cfg.batch_size):
            batch = shuffled[start : start + cfg.batch_size]
            value, grads = batch_loss_and_gradients(
                params,
                [samples[i] for i in batch],
                targets[batch],
                cfg.loss_mode,
                cfg.dropout,
                rng,
            )
            optimizer.step(params.blocks, grads)
            loss_total += value * len(batch)

        val_accuracy, val_f1 = evaluate_logits(
            predict_logits(params, val_samples), targets[val_idx], cfg.loss_mode
        )
        entry = EpochLog(
            epoch=epoch,
            train_loss=loss_total / len(shuffled),
            val_accuracy=val_accuracy,
            val_macro_f1=val_f1,
        )
        log.append(entry)
        logger.debug("Finished epoch", extra=entry.model_dump())

        if val_f1 > best_f1:
            best, best_epoch, best_f1, stale = params.copy(), epoch, val_f1, 0
        else:
            stale += 1
        if stale > cfg.patience or val_accuracy == 1.0:
            break

    logger.info(
        "Finished GAT-MLP training",
        extra={
            "epochs": len(log),
            "best_epoch": best_epoch,
            "best_val_macro_f1": best_f1,
            "structure_mode": str(cfg.structure_mode),
            "stat_encoder": cfg.stat_encoder,
            "loss_mode": str(cfg.loss_mode),
        },
    )
    return TrainingResult(
        params=best, best_epoch=best_epoch, best_val_macro_f1=float(best_f1), log=log
    )


def write_training_log(log: Sequence[EpochLog], path: Path):
    frame = pd.DataFrame([entry.model_dump() for entry in log], columns=list(TRAINING_LOG_COLUMNS))
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        frame.to_csv(path, index=False)
    except OSError as e:
        raise DatasetIoError(f"cannot write training log {path}: {e}") from e
