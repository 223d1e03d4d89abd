"""
Turning portfolio outcomes into winner labels.
"""

from collections import Counter
from collections.abc import Mapping, Sequence

from src.dataset.models import LabeledInstance
from src.errors import AllUnsolvedError
from src.features.models import GlobalFeatures
from src.solvers.models import SolveOutcome, SolverId, SolveStatus
from src.utils.logger import Logger


def label_instance(
    outcomes: Sequence[SolveOutcome], tie_epsilon: float
) -> tuple[SolverId, ...]:
    """
    Pick the winning solvers of one instance.

    The largest clique wins; among equal sizes an Exact solver beats a
    TimedOut one, and every solver within tie_epsilon seconds of the
    fastest remaining one shares the win.

    Args:
        outcomes (Sequence[SolveOutcome]): One outcome per solver.
        tie_epsilon (float): Timing tolerance in seconds.

    Returns:
        tuple[SolverId, ...]: Winners in solver order.

    Raises:
        AllUnsolvedError: If no solver finished its search.
    """
    if not any(outcome.status == SolveStatus.EXACT for outcome in outcomes):
        raise AllUnsolvedError("no solver finished within its budget")

    best_size = max(outcome.size for outcome in outcomes)
    contenders = [outcome for outcome in outcomes if outcome.size == best_size]
    exact = [outcome for outcome in contenders if outcome.status == SolveStatus.EXACT]
    if exact:
        contenders = exact

    fastest = min(outcome.wall_time_s for outcome in contenders)
    winners = {
        outcome.solver
        for outcome in contenders
        if outcome.wall_time_s <= fastest + tie_epsilon
    }
    return tuple(sorted(winners, key=lambda solver: solver.index))


def is_trivial(outcomes: Sequence[SolveOutcome], threshold_s: float) -> bool:
    """
    True when every solver finished exactly in under threshold_s seconds.
    """
    return all(
        outcome.status == SolveStatus.EXACT and outcome.wall_time_s < threshold_s
        for outcome in outcomes
    )


def label_dataset(
    outcomes: Mapping[str, Sequence[SolveOutcome]],
    features: Mapping[str, GlobalFeatures],
    tie_epsilon: float,
    trivial_threshold_s: float,
    logger: Logger,
    graph_refs: Mapping[str, str] | None = None,
) -> list[LabeledInstance]:
    """
    Label every instance that has both outcomes and features.

    Unsolved and trivial instances are dropped with a warning.

    Args:
        outcomes (Mapping[str, Sequence[SolveOutcome]]): Outcomes by instance id.
        features (Mapping[str, GlobalFeatures]): Features by instance id.
        tie_epsilon (float): Timing tolerance in seconds.
        trivial_threshold_s (float): Trivial-instance threshold in seconds.
        logger (Logger): The logger.
        graph_refs (Mapping[str, str] | None): Graph file path by instance id.

    Returns:
        list[LabeledInstance]: Labeled instances sorted by instance id.
    """
    graph_refs = graph_refs or {}
    labeled = []
    for instance_id in sorted(outcomes):
        if instance_id not in features:
            logger.warning(
                "Instance has outcomes but no features, skipping",
                extra={"instance_id": instance_id},
            )
            continue

        instance_outcomes = outcomes[instance_id]
        if is_trivial(instance_outcomes, trivial_threshold_s):
            logger.warning(
                "Dropping trivial instance", extra={"instance_id": instance_id}
            )
            continue

        try:
            winners = label_instance(instance_outcomes, tie_epsilon)
        except AllUnsolvedError:
            logger.warning(
                "Dropping unsolved instance", extra={"instance_id": instance_id}
            )
            continue

        labeled.append(
            LabeledInstance(
                instance_id=instance_id,
                features=features[instance_id],
                graph_ref=graph_refs.get(instance_id),
                winners=winners,
            )
        )

    logger.info(
        "Labeled dataset",
        extra={"labeled": len(labeled), "dropped": len(outcomes) - len(labeled)},
    )
    return labeled


def label_distribution(instances: Sequence[LabeledInstance]) -> dict[str, int]:
    """
    Number of instances each solver wins, in solver order.
    """
    counts = Counter(solver for instance in instances for solver in instance.winners)
    return {str(solver): counts.get(solver, 0) for solver in SolverId}
