"""
Portfolio solving service.

Runs the four solvers on every graph and keeps one outcome table. Solving
is resumable: graphs whose four outcomes are already in the table are not
run again.
"""

from pathlib import Path

from pydantic import BaseModel

from src.config import Settings
from src.core.ingestion_service import instance_id_of, run_jobs
from src.errors import CliqueSelectError
from src.graph.parser import load_graph
from src.solvers.models import Budget, SolveOutcome, SolverId
from src.solvers.portfolio import read_outcomes_csv, run_portfolio, write_outcomes_csv
from src.utils.logger import Logger


class SolveRun(BaseModel):
    solved: list[str]
    skipped: list[str]
    failures: dict[str, str]


def _solve_job(
    path: str, budget: Budget, encoding: str
) -> tuple[str, list[SolveOutcome] | None, str | None]:
    try:
        return path, run_portfolio(load_graph(Path(path), encoding), budget), None
    except (CliqueSelectError, OSError, UnicodeDecodeError) as e:
        return path, None, f"{type(e).__name__}: {e}"


class SolveService:
    """
    Service class for running the solver portfolio over graph files.
    """

    def __init__(self, logger: Logger, settings: Settings):
        """
        Initialize the solve service.

        Args:
            logger (Logger): The logger instance.
            settings (Settings): The settings instance.
        """
        self.logger = logger
        self.settings = settings

    def solve(self, paths: list[Path], budget: Budget, out: Path, jobs: int = 1) -> SolveRun:
        """
        Solve every graph not yet complete in the outcome table at out.

        Args:
            paths (list[Path]): Graph files.
            budget (Budget): Per-solver budget.
            out (Path): Outcome table, read first when it exists.
            jobs (int): Worker processes.

        Returns:
            SolveRun: Newly solved, already complete and failed graphs.
        """
        existing = read_outcomes_csv(out) if out.exists() else {}
        complete = {
            instance_id
            for instance_id, outcomes in existing.items()
            if {outcome.solver for outcome in outcomes} == set(SolverId)
        }

        pending = [path for path in paths if instance_id_of(path) not in complete]
        skipped = sorted(instance_id_of(path) for path in paths if instance_id_of(path) in complete)
        if skipped:
            self.logger.info("Skipping solved graphs", extra={"count": len(skipped)})

        results = run_jobs(
            _solve_job,
            [(str(path), budget, self.settings.file_encoding) for path in pending],
            jobs,
        )

        solved, failures = [], {}
        for path, outcomes, error in results:
            instance_id = instance_id_of(Path(path))
            if error is not None:
                failures[path] = error
                self.logger.warning("Skipping unsolvable graph", extra={"path": path, "error": error})
                continue
            existing[instance_id] = outcomes
            solved.append(instance_id)
            self.logger.info(
                "Solved graph",
                extra={
                    "instance_id": instance_id,
                    "sizes": [outcome.size for outcome in outcomes],
                    "statuses": [str(outcome.status) for outcome in outcomes],
                },
            )

        if solved:
            write_outcomes_csv(
                [(instance_id, outcome) for instance_id, outcomes in existing.items() for outcome in outcomes],
                out,
            )
        return SolveRun(solved=sorted(solved), skipped=skipped, failures=failures)
