"""
Trained GAT-MLP selector and its checkpoint document.
"""

from collections.abc import Mapping, Sequence
from pathlib import Path
from typing import Self

import numpy as np
import numpy.typing as npt
from pydantic import BaseModel, ConfigDict

from src.constants import CHECKPOINT_VERSION
from src.dataset.models import DatasetVariant, LabeledInstance, feature_matrix, label_vector
from src.errors import (
    DatasetIoError,
    ModeMismatchError,
    SchemaMismatchError,
    ShapeMismatchError,
)
from src.features.extraction import extract_global
from src.features.models import MinMaxNormalizer, ZScoreNormalizer
from src.gnn.loss import predict_classes, predict_label_sets
from src.gnn.model import predict_logits
from src.gnn.params import LossMode, ModelParams, ModelShape, TrainConfig
from src.gnn.training import (
    EpochLog,
    TrainingResult,
    fit_input_normalizers,
    make_sample,
    train,
)
from src.graph.models import Graph
from src.graph.parser import load_graph
from src.solvers.models import SolverId
from src.utils.logger import Logger


class ParameterBlock(BaseModel):
    shape: list[int]
    values: list[float]


class GatMlpCheckpoint(BaseModel):
    """
    Versioned JSON document of a trained GAT-MLP.
    """

    version: int = CHECKPOINT_VERSION
    variant: DatasetVariant
    config: TrainConfig
    shape: ModelShape
    node_normalizer: MinMaxNormalizer
    stat_normalizer: ZScoreNormalizer
    blocks: dict[str, ParameterBlock]
    best_epoch: int
    training_log: list[EpochLog]


def graphs_for(
    instances: Sequence[LabeledInstance], graphs: Mapping[str, Graph] | None = None
) -> list[Graph]:
    """
    Graph of every instance, looked up by instance id or loaded from its
    graph_ref.

    Raises:
        DatasetIoError: If neither source provides the graph.
    """
    resolved = []
    for instance in instances:
        if graphs is not None and instance.instance_id in graphs:
            resolved.append(graphs[instance.instance_id])
        elif instance.graph_ref:
            resolved.append(load_graph(Path(instance.graph_ref)))
        else:
            raise DatasetIoError(f"no graph available for instance {instance.instance_id}")
    return resolved


class GatMlpSelector(BaseModel):
    """
    A trained GAT-MLP with the normalizers fitted on its training data.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True)

    variant: DatasetVariant
    config: TrainConfig
    params: ModelParams
    node_normalizer: MinMaxNormalizer
    stat_normalizer: ZScoreNormalizer
    best_epoch: int = 0
    training_log: list[EpochLog] = []

    @classmethod
    def fit(
        cls,
        variant: DatasetVariant,
        instances: Sequence[LabeledInstance],
        cfg: TrainConfig,
        logger: Logger,
        graphs: Mapping[str, Graph] | None = None,
        loss_mode: LossMode | None = None,
    ) -> Self:
        """
        Fit the normalizers and train the model on labeled instances.

        Method1 and Method2 rows train with their single label under the
        softmax loss; Method3 rows train on their winner sets under the
        sigmoid loss.

        Args:
            variant (DatasetVariant): Variant of the instances.
            instances (Sequence[LabeledInstance]): Training rows.
            cfg (TrainConfig): Training configuration; its loss mode is
                replaced by loss_mode.
            logger (Logger): The logger.
            graphs (Mapping[str, Graph] | None): Graphs by instance id.
            loss_mode (LossMode | None): Loss override; derived from the
                variant when None. Sigmoid on single-label rows trains on
                one-hot targets.

        Returns:
            GatMlpSelector: The trained selector.

        Raises:
            ModeMismatchError: If softmax is asked for Method3 rows.
        """
        mode = loss_mode or (
            LossMode.SIGMOID if variant == DatasetVariant.METHOD3 else LossMode.SOFTMAX
        )
        if mode == LossMode.SOFTMAX and variant == DatasetVariant.METHOD3:
            raise ModeMismatchError("softmax loss needs single-label rows")
        cfg = cfg.model_copy(update={"loss_mode": mode})
        global_rows = feature_matrix(list(instances))
        if ModelShape.from_config(cfg).uses_structure:
            instance_graphs = graphs_for(instances, graphs)
            normalizers = fit_input_normalizers(instance_graphs, global_rows)
        else:
            instance_graphs = [None] * len(instances)
            normalizers = fit_input_normalizers(None, global_rows)
        node_normalizer, stat_normalizer = normalizers
        samples = [
            make_sample(g, row, node_normalizer, stat_normalizer)
            for g, row in zip(instance_graphs, global_rows, strict=True)
        ]
        if mode == LossMode.SOFTMAX:
            targets = label_vector(list(instances))
        else:
            targets = np.stack([instance.target_vector() for instance in instances])

        result: TrainingResult = train(samples, targets, cfg, logger)
        return cls(
            variant=variant,
            config=cfg,
            params=result.params,
            node_normalizer=node_normalizer,
            stat_normalizer=stat_normalizer,
            best_epoch=result.best_epoch,
            training_log=result.log,
        )

    def logits(
        self, graphs: Sequence[Graph | None], global_rows: npt.ArrayLike
    ) -> npt.NDArray[np.float64]:
        rows = np.atleast_2d(np.asarray(global_rows, dtype=np.float64))
        samples = [
            make_sample(g, row, self.node_normalizer, self.stat_normalizer)
            for g, row in zip(graphs, rows, strict=True)
        ]
        return predict_logits(self.params, samples)

    def predict_graph(self, g: Graph) -> tuple[SolverId, ...]:
        """Winner set predicted for a graph, computing its features on the fly."""
        logits = self.logits([g], extract_global(g).as_vector())
        return self._sets(logits)[0]

    def predict_instances(
        self,
        instances: Sequence[LabeledInstance],
        graphs: Mapping[str, Graph] | None = None,
    ) -> list[tuple[SolverId, ...]]:
        if self.params.shape.uses_structure:
            instance_graphs = graphs_for(instances, graphs)
        else:
            instance_graphs = [None] * len(instances)
        logits = self.logits(instance_graphs, feature_matrix(list(instances)))
        return self._sets(logits)

    def _sets(self, logits: npt.NDArray[np.float64]) -> list[tuple[SolverId, ...]]:
        # single-label variants always predict one solver
        if self.variant != DatasetVariant.METHOD3:
            return [(SolverId.from_index(int(i)),) for i in predict_classes(logits)]
        return [
            tuple(solver for solver in SolverId if row[solver.index])
            for row in predict_label_sets(logits)
        ]

    def to_checkpoint(self) -> GatMlpCheckpoint:
        return GatMlpCheckpoint(
            variant=self.variant,
            config=self.config,
            shape=self.params.shape,
            node_normalizer=self.node_normalizer,
            stat_normalizer=self.stat_normalizer,
            blocks={
                name: ParameterBlock(shape=list(block.shape), values=block.ravel().tolist())
                for name, block in self.params.blocks.items()
            },
            best_epoch=self.best_epoch,
            training_log=self.training_log,
        )

    @classmethod
    def from_checkpoint(cls, checkpoint: GatMlpCheckpoint) -> Self:
        """
        Raises:
            SchemaMismatchError: If the version or a block shape is wrong.
        """
        if checkpoint.version != CHECKPOINT_VERSION:
            raise SchemaMismatchError(
                f"checkpoint version {checkpoint.version}, expected {CHECKPOINT_VERSION}"
            )
        try:
            blocks = {
                name: np.asarray(block.values, dtype=np.float64).reshape(block.shape)
                for name, block in checkpoint.blocks.items()
            }
        except ValueError as e:
            raise SchemaMismatchError(f"malformed parameter block: {e}") from e
        params = ModelParams(shape=checkpoint.shape, blocks=blocks)
        try:
            params.check_shapes()
        except ShapeMismatchError as e:
            raise SchemaMismatchError(str(e)) from e
        return cls(
            variant=checkpoint.variant,
            config=checkpoint.config,
            params=params,
            node_normalizer=checkpoint.node_normalizer,
            stat_normalizer=checkpoint.stat_normalizer,
            best_epoch=checkpoint.best_epoch,
            training_log=checkpoint.training_log,
        )


def save_gat_selector(selector: GatMlpSelector, path: Path):
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(selector.to_checkpoint().model_dump_json(), encoding="utf-8")
    except OSError as e:
        raise DatasetIoError(f"cannot write checkpoint {path}: {e}") from e


def load_gat_selector(path: Path) -> GatMlpSelector:
    try:
        document = path.read_text(encoding="utf-8")
    except OSError as e:
        raise DatasetIoError(f"cannot read checkpoint {path}: {e}") from e
    return GatMlpSelector.from_checkpoint(GatMlpCheckpoint.model_validate_json(document))
