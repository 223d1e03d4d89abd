import pytest

from src.core.dataset_service import DatasetService, binary_dataset_file, dataset_file
from src.dataset.models import CorpusSpec, DatasetManifest, DatasetVariant, GeneratorFamily
from src.dataset.repository import DatasetRepository
from src.errors import TooFewInstancesError
from src.features.extraction import extract_global
from src.features.table import write_features_csv
from src.solvers.models import SolveOutcome, SolverId, SolveStatus
from src.solvers.portfolio import write_outcomes_csv
from tests.conftest import complete, cycle, synthetic_instances


@pytest.fixture
def service(mock_logger, settings):
    return DatasetService(DatasetRepository(mock_logger, settings), mock_logger, settings)


@pytest.fixture
def manifest():
    return DatasetManifest(
        variant=None, seed=2, ratio=0.75, budget_s=5.0, tie_epsilon_s=0.05
    )


def test_generate_corpus(tmp_path, service):
    spec = CorpusSpec(
        family=GeneratorFamily.ERDOS_RENYI,
        node_range=(10, 12),
        density_range=(0.3, 0.3),
        count=4,
        seed=0,
    )

    assert service.generate_corpus([spec], tmp_path) == 4
    assert len(list(tmp_path.glob("*.clq"))) == 4
    assert service.corpus_specs(tmp_path) == [spec]


def test_corpus_specs_of_plain_directory(tmp_path, service):
    assert service.corpus_specs(tmp_path) == []


def test_label_writes_the_multi_label_table(tmp_path, service, manifest):
    features_path = tmp_path / "features.csv"
    outcomes_path = tmp_path / "outcomes.csv"
    write_features_csv({"k5": extract_global(complete(5)), "c6": extract_global(cycle(6))}, features_path)
    write_outcomes_csv(
        [
            (instance, SolveOutcome(solver=solver, size=size, wall_time_s=seconds, status=SolveStatus.EXACT))
            for instance, size in (("k5", 5), ("c6", 2))
            for solver, seconds in zip(SolverId, (0.5, 0.2, 0.22, 0.9), strict=True)
        ],
        outcomes_path,
    )

    instances = service.label(outcomes_path, features_path, manifest, tmp_path / "labeled.csv")
    loaded, loaded_manifest = service.load_labeled(tmp_path / "labeled.csv")

    assert [i.instance_id for i in instances] == ["c6", "k5"]
    assert all(i.winners == (SolverId.DEGEN_BB, SolverId.DYN_ORDER_BB) for i in instances)
    assert loaded == instances
    assert loaded_manifest.variant is None
    assert loaded_manifest.label_distribution["DegenBB"] == 2


def test_build_method1_splits_before_transforming(tmp_path, service, manifest):
    instances = synthetic_instances(20)

    written = service.build(instances, DatasetVariant.METHOD1, manifest, tmp_path)
    train, train_manifest = service.load_labeled(written[0])
    test, _ = service.load_labeled(written[1])

    assert written == [
        dataset_file(tmp_path, DatasetVariant.METHOD1, "train"),
        dataset_file(tmp_path, DatasetVariant.METHOD1, "test"),
    ]
    assert written[0].name == "m1_train.csv"
    assert train_manifest.split == "train"
    assert train_manifest.variant == DatasetVariant.METHOD1
    assert not {r.instance_id for r in train} & {r.instance_id for r in test}
    assert len(train) + len(test) == 24
    assert all(not r.is_multi_label for r in train + test)


def test_build_method3_writes_binary_datasets(tmp_path, service, manifest):
    written = service.build(synthetic_instances(12), DatasetVariant.METHOD3, manifest, tmp_path)

    assert len(written) == 2 * (1 + len(SolverId))
    assert binary_dataset_file(tmp_path, "ColorBB", "test") in written
    assert (tmp_path / "m3_PartitionBoundBB_train.csv").exists()


def test_build_needs_two_instances(tmp_path, service, manifest):
    with pytest.raises(TooFewInstancesError):
        service.build(synthetic_instances(1), DatasetVariant.METHOD2, manifest, tmp_path)
