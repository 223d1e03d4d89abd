"""
The three ways of handling multi-label instances.
"""

from collections.abc import Sequence

from src.dataset.models import BinaryDataset, DatasetVariant, LabeledInstance
from src.errors import EmptyResultError
from src.solvers.models import SolverId


def apply_method1(data: Sequence[LabeledInstance]) -> list[LabeledInstance]:
    """
    Split each instance with k winners into k single-label rows.
    """
    return [
        instance.model_copy(update={"winners": (solver,)})
        for instance in data
        for solver in instance.winners
    ]


def apply_method2(data: Sequence[LabeledInstance]) -> list[LabeledInstance]:
    """
    Drop multi-label instances.

    Raises:
        EmptyResultError: If the input is non-empty and every instance
            is multi-label.
    """
    survivors = [instance for instance in data if not instance.is_multi_label]
    if data and not survivors:
        raise EmptyResultError("every instance is multi-label")
    return survivors


def apply_method3(data: Sequence[LabeledInstance]) -> dict[SolverId, BinaryDataset]:
    """
    One binary dataset per solver, target 1 iff the solver is a winner.
    """
    instances = list(data)
    return {
        solver: BinaryDataset(
            solver=solver,
            instances=instances,
            targets=[int(solver in instance.winners) for instance in instances],
        )
        for solver in SolverId
    }


def apply_single_label_variant(
    data: Sequence[LabeledInstance], variant: DatasetVariant
) -> list[LabeledInstance]:
    """Method1 or Method2 transform; Method3 keeps its multi-label rows."""
    match variant:
        case DatasetVariant.METHOD1:
            return apply_method1(data)
        case DatasetVariant.METHOD2:
            return apply_method2(data)
        case DatasetVariant.METHOD3:
            return list(data)
