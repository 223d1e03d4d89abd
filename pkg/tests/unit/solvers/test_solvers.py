import random
from itertools import combinations

import networkx as nx
import pytest

from src.errors import EmptyGraphError
from src.graph.models import Graph
from src.graph.structure import is_clique
from src.solvers import degen_bb
from src.solvers.base import color_classes, relabeled_masks
from src.solvers.models import Budget, SolverId, SolveStatus
from src.solvers.portfolio import SOLVERS, clique_core_gap, run_portfolio
from tests.conftest import complete, cycle, from_networkx, to_networkx

GENEROUS = Budget(time_limit_s=60.0)


def omega(g: Graph) -> int:
    return max((len(c) for c in nx.find_cliques(to_networkx(g))), default=0)


def planted(n: int, p: float, size: int, seed: int) -> Graph:
    nx_graph = nx.gnp_random_graph(n, p, seed=seed)
    members = random.Random(seed).sample(range(n), size)
    nx_graph.add_edges_from(combinations(members, 2))
    return from_networkx(nx_graph)


@pytest.fixture(scope="module")
def random_graphs():
    """A hundred seeded graphs with n <= 40 at sparse, medium and dense p."""
    rng = random.Random(21)
    return [
        from_networkx(
            nx.gnp_random_graph(
                rng.randint(1, 40), rng.choice([0.2, 0.5, 0.8]), seed=rng.randint(0, 10**6)
            )
        )
        for _ in range(100)
    ]


@pytest.fixture(scope="module")
def oracle_sizes(random_graphs):
    return [omega(g) for g in random_graphs]


@pytest.mark.parametrize("solver_id", list(SolverId))
def test_solver_matches_enumeration_oracle(solver_id, random_graphs, oracle_sizes, mock_logger):
    solver = SOLVERS[solver_id](mock_logger)
    for g, size in zip(random_graphs, oracle_sizes):
        outcome = solver.solve(g, GENEROUS)

        assert outcome.status == SolveStatus.EXACT
        assert outcome.size == size
        assert is_clique(g, outcome.clique)


@pytest.mark.parametrize("solver_id", list(SolverId))
def test_solver_on_named_graphs(solver_id, k5, c5, petersen, edgeless5, mock_logger):
    solver = SOLVERS[solver_id](mock_logger)

    assert solver.solve(k5, GENEROUS).size == 5
    assert solver.solve(c5, GENEROUS).size == 2
    assert solver.solve(petersen, GENEROUS).size == 2
    assert solver.solve(edgeless5, GENEROUS).size == 1
    assert solver.solve(Graph.from_edges(1, []), GENEROUS).clique == (0,)


@pytest.mark.parametrize("solver_id", list(SolverId))
def test_solver_finds_planted_clique(solver_id, mock_logger):
    g = planted(60, 0.3, 12, seed=4)

    outcome = SOLVERS[solver_id](mock_logger).solve(g, GENEROUS)

    assert outcome.size == omega(g) >= 12


@pytest.mark.parametrize("solver_id", list(SolverId))
def test_node_limit_times_out_with_valid_incumbent(solver_id, mock_logger):
    g = planted(40, 0.5, 10, seed=2)

    outcome = SOLVERS[solver_id](mock_logger).solve(g, Budget(time_limit_s=60.0, node_limit=2))

    assert outcome.status == SolveStatus.TIMED_OUT
    assert outcome.nodes_expanded <= 3
    assert is_clique(g, outcome.clique)
    assert outcome.size <= omega(g)


@pytest.mark.parametrize("solver_id", list(SolverId))
def test_larger_node_limit_never_shrinks_the_clique(solver_id, mock_logger):
    g = planted(24, 0.5, 7, seed=9)
    solver = SOLVERS[solver_id](mock_logger)
    exact = solver.solve(g, GENEROUS)

    sizes = [
        solver.solve(g, Budget(time_limit_s=60.0, node_limit=limit)).size
        for limit in range(1, exact.nodes_expanded + 1)
    ]

    assert sizes == sorted(sizes)
    assert sizes[-1] == exact.size


def test_degen_bb_peels_once_per_graph(mock_logger, monkeypatch):
    calls = []
    real = degen_bb.core_decomposition
    monkeypatch.setattr(
        degen_bb, "core_decomposition", lambda g: calls.append(g) or real(g)
    )
    solver = degen_bb.DegenBB(mock_logger)
    first, second = planted(20, 0.4, 6, seed=1), planted(20, 0.4, 6, seed=2)

    assert solver.solve(first, GENEROUS).size == omega(first)
    assert solver.solve(second, GENEROUS).size == omega(second)
    assert calls == [first, second]


@pytest.mark.parametrize("solver_id", list(SolverId))
def test_empty_graph_raises(solver_id, mock_logger):
    with pytest.raises(EmptyGraphError):
        SOLVERS[solver_id](mock_logger).solve(Graph.from_edges(0, []), GENEROUS)


def test_portfolio_runs_every_solver_in_order(petersen, mock_logger):
    outcomes = run_portfolio(petersen, GENEROUS, mock_logger)

    assert [o.solver for o in outcomes] == list(SolverId)
    assert {o.size for o in outcomes} == {2}


def test_portfolio_solvers_agree(random_graphs, mock_logger):
    for g in random_graphs[:15]:
        sizes = {o.size for o in run_portfolio(g, GENEROUS, mock_logger)}

        assert len(sizes) == 1


def test_clique_core_gap(random_graphs, oracle_sizes):
    for g, size in zip(random_graphs, oracle_sizes):
        assert clique_core_gap(g, size) >= 0
    for n in range(2, 11):
        assert clique_core_gap(complete(n), n) == 0


def test_color_classes_are_independent_sets():
    g = cycle(7)
    masks = relabeled_masks(g, list(range(7)))

    classes = color_classes((1 << 7) - 1, masks)

    assert sum(bin(c).count("1") for c in classes) == 7
    for color_class in classes:
        members = [v for v in range(7) if color_class >> v & 1]
        assert all(not (masks[u] >> v) & 1 for u, v in combinations(members, 2))
