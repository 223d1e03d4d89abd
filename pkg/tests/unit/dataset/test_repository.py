import json

import pytest

from src.dataset.corpus import corpus_generate
from src.dataset.models import CorpusSpec, DatasetManifest, DatasetVariant, GeneratorFamily
from src.dataset.repository import DatasetRepository, manifest_path
from src.dataset.variants import apply_method3
from src.errors import DatasetIoError, SchemaMismatchError
from src.graph.parser import load_graph
from src.solvers.models import SolverId
from tests.conftest import synthetic_instances


@pytest.fixture
def repository(mock_logger, settings):
    return DatasetRepository(mock_logger, settings)


@pytest.fixture
def manifest():
    return DatasetManifest(
        variant=DatasetVariant.METHOD3,
        seed=4,
        ratio=0.8,
        budget_s=10.0,
        tie_epsilon_s=0.05,
    )


def test_dataset_round_trip(tmp_path, repository, manifest):
    instances = synthetic_instances(6)
    instances[0] = instances[0].model_copy(update={"graph_ref": "corpus/g000.clq"})
    path = tmp_path / "m3_train.csv"

    repository.save_dataset(instances, path, manifest)
    loaded, loaded_manifest = repository.load_dataset(path)

    assert loaded == instances
    assert loaded_manifest == manifest
    assert manifest_path(path).name == "m3_train.manifest.json"


def test_binary_dataset_round_trip(tmp_path, repository, manifest):
    binary = apply_method3(synthetic_instances(5))[SolverId.PARTITION_BOUND_BB]
    path = tmp_path / "m3_PartitionBoundBB_train.csv"

    repository.save_binary_dataset(binary, path, manifest)
    loaded, loaded_manifest = repository.load_binary_dataset(path)

    assert loaded.targets == [0, 0, 0, 0, 1]
    assert loaded.solver == SolverId.PARTITION_BOUND_BB
    assert loaded_manifest.solver == SolverId.PARTITION_BOUND_BB


def test_missing_dataset_raises_io_error(tmp_path, repository):
    with pytest.raises(DatasetIoError):
        repository.load_dataset(tmp_path / "absent.csv")


def test_manifest_missing_key(tmp_path, repository, manifest):
    path = tmp_path / "data.csv"
    repository.save_dataset(synthetic_instances(2), path, manifest)
    document = json.loads(manifest_path(path).read_text())
    del document["tie_epsilon_s"]
    manifest_path(path).write_text(json.dumps(document))

    with pytest.raises(SchemaMismatchError):
        repository.load_dataset(path)


def test_unreadable_manifest(tmp_path, repository, manifest):
    path = tmp_path / "data.csv"
    repository.save_dataset(synthetic_instances(2), path, manifest)
    manifest_path(path).write_text("{not json")

    with pytest.raises(SchemaMismatchError):
        repository.load_dataset(path)


def test_dataset_missing_column(tmp_path, repository, manifest):
    path = tmp_path / "data.csv"
    repository.save_dataset(synthetic_instances(2), path, manifest)
    path.write_text("instance_id,V\ng0,4\n")

    with pytest.raises(SchemaMismatchError):
        repository.load_dataset(path)


def test_corpus_files_parse_back(tmp_path, repository):
    spec = CorpusSpec(
        family=GeneratorFamily.PLANTED_CLIQUE,
        node_range=(10, 15),
        density_range=(0.2, 0.4),
        count=3,
        seed=1,
    )
    graphs = corpus_generate(spec)

    repository.save_corpus(tmp_path, [spec], graphs)
    manifest = repository.load_corpus_manifest(tmp_path)

    assert manifest.specs == [spec]
    assert [g.instance_id for g in manifest.graphs] == [g.instance_id for g in graphs]
    for generated in graphs:
        parsed = load_graph(tmp_path / f"{generated.instance_id}.clq")
        assert parsed.adjacency == generated.graph.adjacency


def test_corpus_manifest_absent(tmp_path, repository):
    assert repository.load_corpus_manifest(tmp_path) is None
