import pytest

from src.errors import DatasetIoError, SchemaMismatchError
from src.solvers.models import SolveOutcome, SolverId, SolveStatus
from src.solvers.portfolio import outcomes_frame, read_outcomes_csv, write_outcomes_csv


def outcome(solver: SolverId, size: int, seconds: float, status=SolveStatus.EXACT) -> SolveOutcome:
    return SolveOutcome(solver=solver, size=size, wall_time_s=seconds, status=status, nodes_expanded=7)


@pytest.fixture
def pairs():
    """Outcomes of two instances, written out of order."""
    return [
        ("g2", outcome(SolverId.DEGEN_BB, 3, 0.25)),
        ("g1", outcome(SolverId.PARTITION_BOUND_BB, 4, 1.5, SolveStatus.TIMED_OUT)),
        ("g1", outcome(SolverId.COLOR_BB, 4, 0.1)),
    ]


def test_outcomes_frame_is_sorted(pairs):
    frame = outcomes_frame(pairs)

    assert list(frame.columns) == [
        "instance",
        "solver",
        "size",
        "wall_time_s",
        "status",
        "nodes_expanded",
    ]
    assert frame["instance"].tolist() == ["g1", "g1", "g2"]
    assert frame["solver"].tolist() == ["ColorBB", "PartitionBoundBB", "DegenBB"]


def test_outcome_table_round_trip(tmp_path, pairs):
    path = tmp_path / "outcomes.csv"

    write_outcomes_csv(pairs, path)
    grouped = read_outcomes_csv(path)

    assert sorted(grouped) == ["g1", "g2"]
    assert [o.solver for o in grouped["g1"]] == [SolverId.COLOR_BB, SolverId.PARTITION_BOUND_BB]
    assert grouped["g1"][1].status == SolveStatus.TIMED_OUT
    assert grouped["g2"][0].wall_time_s == 0.25


def test_read_missing_file(tmp_path):
    with pytest.raises(DatasetIoError):
        read_outcomes_csv(tmp_path / "missing.csv")


def test_read_wrong_schema(tmp_path):
    path = tmp_path / "outcomes.csv"
    path.write_text("instance,solver\ng1,ColorBB\n")

    with pytest.raises(SchemaMismatchError):
        read_outcomes_csv(path)


def test_outcome_size_must_match_witness():
    with pytest.raises(ValueError):
        SolveOutcome(
            solver=SolverId.COLOR_BB,
            clique=(0, 1),
            size=3,
            wall_time_s=0.0,
            status=SolveStatus.EXACT,
        )
