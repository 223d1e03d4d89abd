import random
from itertools import combinations
from pathlib import Path
from unittest.mock import MagicMock

import networkx as nx
import pytest

from src.config import Settings
from src.dataset.models import LabeledInstance
from src.features.extraction import extract_global
from src.graph.models import Graph
from src.solvers.models import SolverId
from src.utils.logger import Logger

ASSETS = Path(__file__).parent / "assets"


def complete(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def from_networkx(nx_graph: nx.Graph) -> Graph:
    mapping = {node: i for i, node in enumerate(sorted(nx_graph.nodes))}
    return Graph.from_edges(
        len(mapping), [(mapping[u], mapping[v]) for u, v in nx_graph.edges]
    )


def to_networkx(g: Graph) -> nx.Graph:
    nx_graph = nx.Graph()
    nx_graph.add_nodes_from(range(g.node_count))
    nx_graph.add_edges_from(g.edges())
    return nx_graph


def labeled(instance_id: str, winners, g: Graph | None = None) -> LabeledInstance:
    return LabeledInstance(
        instance_id=instance_id,
        features=extract_global(g if g is not None else complete(4)),
        winners=tuple(winners),
    )


def synthetic_graphs(count: int, seed: int = 0) -> dict[str, Graph]:
    """Seeded random graphs keyed by instance id."""
    rng = random.Random(seed)
    return {
        f"g{i:03d}": from_networkx(
            nx.gnp_random_graph(rng.randint(8, 30), rng.uniform(0.05, 0.95), seed=rng.randint(0, 10**6))
        )
        for i in range(count)
    }


def synthetic_instances(count: int, seed: int = 0) -> list[LabeledInstance]:
    """
    The graphs of synthetic_graphs with a winner that depends on density,
    so the labels are learnable; every fifth instance also credits
    PartitionBoundBB.
    """
    instances = []
    for i, (instance_id, g) in enumerate(synthetic_graphs(count, seed).items()):
        density = extract_global(g).D
        if density < 0.35:
            winners = [SolverId.COLOR_BB]
        elif density < 0.65:
            winners = [SolverId.DEGEN_BB]
        else:
            winners = [SolverId.DYN_ORDER_BB]
        if i % 5 == 4:
            winners.append(SolverId.PARTITION_BOUND_BB)
        instances.append(labeled(instance_id, winners, g))
    return instances


@pytest.fixture
def mock_logger():
    """Mock the logger."""
    mock = MagicMock(spec=Logger)
    mock.info = MagicMock()
    mock.error = MagicMock()
    mock.warning = MagicMock()
    mock.debug = MagicMock()
    mock.exception = MagicMock()
    return mock


@pytest.fixture
def k3():
    return complete(3)


@pytest.fixture
def k4():
    return complete(4)


@pytest.fixture
def k5():
    return complete(5)


@pytest.fixture
def c5():
    return cycle(5)


@pytest.fixture
def p3():
    return path(3)


@pytest.fixture
def star5():
    """Star with five leaves."""
    return star(5)


@pytest.fixture
def diamond():
    """K4 minus one edge: two triangles sharing the edge (0, 1)."""
    return Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)])


@pytest.fixture
def petersen():
    return from_networkx(nx.petersen_graph())


@pytest.fixture
def two_k4_bridged():
    """Two K4s on 0..3 and 4..7 joined by the edge (3, 4)."""
    edges = list(combinations(range(4), 2)) + list(combinations(range(4, 8), 2))
    return Graph.from_edges(8, [*edges, (3, 4)])


@pytest.fixture
def edgeless5():
    return Graph.from_edges(5, [])


@pytest.fixture
def settings():
    return Settings()
