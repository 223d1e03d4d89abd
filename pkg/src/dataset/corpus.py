"""
Synthetic corpus generation.

Three random graph families stand in for a benchmark corpus: Erdős–Rényi,
preferential attachment and Erdős–Rényi with a planted clique. Every
graph is derived from the batch seed, so a spec always yields the same
edge sets.
"""

import math

import networkx as nx
import numpy as np

from src.dataset.models import CorpusSpec, GeneratedGraph, GeneratorFamily
from src.errors import InvalidSpecError
from src.graph.models import Graph

SPARSE_DENSITY = 0.05


def _check_spec(spec: CorpusSpec):
    low_n, high_n = spec.node_range
    low_p, high_p = spec.density_range
    if spec.count < 1:
        raise InvalidSpecError(f"count must be at least 1, got {spec.count}")
    if not 2 <= low_n <= high_n:
        raise InvalidSpecError(f"invalid node range {spec.node_range}")
    if not 0 < low_p <= high_p <= 1:
        raise InvalidSpecError(f"density range {spec.density_range} not within (0, 1]")
    if spec.planted_size is not None and not 2 <= spec.planted_size <= low_n:
        raise InvalidSpecError(
            f"planted size {spec.planted_size} must lie in 2..{low_n}"
        )


def _gnp(n: int, p: float, seed: int) -> nx.Graph:
    if p < SPARSE_DENSITY:
        return nx.fast_gnp_random_graph(n, p, seed=seed)
    return nx.gnp_random_graph(n, p, seed=seed)


def _preferential_attachment(n: int, p: float, seed: int) -> nx.Graph:
    # m edges per new node gives density close to 2m / (n - 1).
    m = min(max(1, round(p * (n - 1) / 2)), n - 1)
    return nx.barabasi_albert_graph(n, m, seed=seed)


def _planted_clique(
    n: int, p: float, k: int, seed: int, rng: np.random.Generator
) -> nx.Graph:
    graph = _gnp(n, p, seed)
    members = sorted(int(v) for v in rng.choice(n, size=k, replace=False))
    graph.add_edges_from(
        (u, v) for i, u in enumerate(members) for v in members[i + 1 :]
    )
    return graph


def corpus_generate(spec: CorpusSpec) -> list[GeneratedGraph]:
    """
    Generate the graphs described by spec.

    Args:
        spec (CorpusSpec): The batch to generate.

    Returns:
        list[GeneratedGraph]: The graphs with their provenance.

    Raises:
        InvalidSpecError: If the spec is inconsistent.
    """
    _check_spec(spec)

    rng = np.random.default_rng(spec.seed)
    low_n, high_n = spec.node_range
    low_p, high_p = spec.density_range

    generated = []
    for i in range(spec.count):
        n = int(rng.integers(low_n, high_n + 1))
        p = float(rng.uniform(low_p, high_p)) if high_p > low_p else low_p
        graph_seed = int(rng.integers(2**31 - 1))

        planted_size = None
        match spec.family:
            case GeneratorFamily.ERDOS_RENYI:
                nx_graph = _gnp(n, p, graph_seed)
            case GeneratorFamily.PREFERENTIAL_ATTACHMENT:
                nx_graph = _preferential_attachment(n, p, graph_seed)
            case GeneratorFamily.PLANTED_CLIQUE:
                planted_size = spec.planted_size or max(2, round(math.sqrt(n)))
                nx_graph = _planted_clique(n, p, planted_size, graph_seed, rng)

        generated.append(
            GeneratedGraph(
                instance_id=f"{spec.family}-{spec.seed}-{i:04d}",
                family=spec.family,
                node_count=n,
                density=p,
                seed=graph_seed,
                planted_size=planted_size,
                graph=Graph.from_edges(n, nx_graph.edges()),
            )
        )
    return generated


def default_corpus_specs(
    total: int = 300,
    seed: int = 0,
    node_range: tuple[int, int] = (20, 2000),
    density_range: tuple[float, float] = (0.01, 0.95),
) -> list[CorpusSpec]:
    """
    The default corpus: one third of the graphs per generator family.

    Raises:
        InvalidSpecError: If total is smaller than the number of families.
    """
    families = list(GeneratorFamily)
    if total < len(families):
        raise InvalidSpecError(f"need at least {len(families)} graphs, got {total}")

    base, extra = divmod(total, len(families))
    return [
        CorpusSpec(
            family=family,
            node_range=node_range,
            density_range=density_range,
            count=base + (1 if i < extra else 0),
            seed=seed + i,
        )
        for i, family in enumerate(families)
    ]
