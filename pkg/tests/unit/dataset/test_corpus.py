import networkx as nx
import pytest

from src.dataset.corpus import corpus_generate
from src.dataset.models import CorpusSpec, GeneratorFamily
from src.errors import InvalidSpecError
from tests.conftest import to_networkx


def spec(family=GeneratorFamily.ERDOS_RENYI, **overrides) -> CorpusSpec:
    values = {
        "family": family,
        "node_range": (20, 40),
        "density_range": (0.1, 0.5),
        "count": 6,
        "seed": 7,
    }
    return CorpusSpec(**(values | overrides))


@pytest.mark.parametrize("family", list(GeneratorFamily))
def test_corpus_is_reproducible(family):
    first = corpus_generate(spec(family))
    second = corpus_generate(spec(family))

    assert [g.instance_id for g in first] == [g.instance_id for g in second]
    assert [g.graph.adjacency for g in first] == [g.graph.adjacency for g in second]


@pytest.mark.parametrize("family", list(GeneratorFamily))
def test_corpus_respects_ranges(family):
    for generated in corpus_generate(spec(family)):
        assert 20 <= generated.node_count <= 40
        assert generated.graph.node_count == generated.node_count
        assert 0.1 <= generated.density <= 0.5
        assert generated.family == family


def test_seed_changes_the_corpus():
    first = corpus_generate(spec(seed=1))
    second = corpus_generate(spec(seed=2))

    assert [g.graph.adjacency for g in first] != [g.graph.adjacency for g in second]


def test_planted_clique_is_present():
    for generated in corpus_generate(spec(GeneratorFamily.PLANTED_CLIQUE, planted_size=9)):
        omega = max(len(c) for c in nx.find_cliques(to_networkx(generated.graph)))

        assert generated.planted_size == 9
        assert omega >= 9


def test_planted_size_defaults_to_root_of_n():
    for generated in corpus_generate(spec(GeneratorFamily.PLANTED_CLIQUE, count=3)):
        assert generated.planted_size == max(2, round(generated.node_count**0.5))


def test_instance_ids_are_unique():
    ids = [g.instance_id for g in corpus_generate(spec(count=12))]

    assert len(set(ids)) == 12


def test_fixed_density():
    generated = corpus_generate(spec(density_range=(0.3, 0.3), count=2))

    assert {g.density for g in generated} == {0.3}


@pytest.mark.parametrize(
    "overrides",
    [
        {"count": 0},
        {"node_range": (1, 5)},
        {"node_range": (10, 5)},
        {"density_range": (0.0, 0.5)},
        {"density_range": (0.5, 1.2)},
    ],
)
def test_invalid_specs(overrides):
    with pytest.raises(InvalidSpecError):
        corpus_generate(spec(**overrides))


def test_planted_size_larger_than_graph():
    with pytest.raises(InvalidSpecError):
        corpus_generate(spec(GeneratorFamily.PLANTED_CLIQUE, planted_size=25))

