"""
Encoder ablation: train every encoder combination under one configuration
and compare them on the same test rows.
"""

from collections.abc import Mapping, Sequence

from pydantic import BaseModel

from src.dataset.models import DatasetVariant, LabeledInstance
from src.evaluation.metrics import confusion, metric_report
from src.gnn.params import AblationVariant, TrainConfig
from src.gnn.selector import GatMlpSelector
from src.graph.models import Graph
from src.solvers.models import SolverId
from src.utils.logger import Logger


class AblationRow(BaseModel):
    variant: AblationVariant
    accuracy: float
    macro_f1: float
    weighted_f1: float
    best_epoch: int


def run_ablation(
    train_instances: Sequence[LabeledInstance],
    test_instances: Sequence[LabeledInstance],
    cfg: TrainConfig,
    logger: Logger,
    graphs: Mapping[str, Graph] | None = None,
    variants: Sequence[AblationVariant] = tuple(AblationVariant),
    dataset_variant: DatasetVariant = DatasetVariant.METHOD2,
) -> list[AblationRow]:
    """
    Train and score each ablation variant on a single-label dataset.

    Args:
        train_instances (Sequence[LabeledInstance]): Training rows.
        test_instances (Sequence[LabeledInstance]): Test rows.
        cfg (TrainConfig): Shared configuration; only the encoder modes
            change between variants.
        logger (Logger): The logger.
        graphs (Mapping[str, Graph] | None): Graphs by instance id.
        variants (Sequence[AblationVariant]): Variants to run.
        dataset_variant (DatasetVariant): Method1 or Method2.

    Returns:
        list[AblationRow]: One row per variant, in the given order.
    """
    rows = []
    truth = [instance.label for instance in test_instances]
    for variant in variants:
        structure_mode, stat_encoder = variant.encoders
        variant_cfg = cfg.model_copy(
            update={"structure_mode": structure_mode, "stat_encoder": stat_encoder}
        )
        selector = GatMlpSelector.fit(
            dataset_variant, train_instances, variant_cfg, logger, graphs
        )
        predicted = [winners[0].index for winners in selector.predict_instances(test_instances, graphs)]
        report = metric_report(confusion(truth, predicted, len(SolverId)))
        rows.append(
            AblationRow(
                variant=variant,
                accuracy=report.accuracy,
                macro_f1=report.macro_f1,
                weighted_f1=report.weighted_f1,
                best_epoch=selector.best_epoch,
            )
        )
        logger.info("Finished ablation variant", extra=rows[-1].model_dump(mode="json"))
    return rows
