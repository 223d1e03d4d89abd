import json

import numpy as np
import pytest

from src.dataset.models import DatasetVariant, feature_matrix
from src.dataset.variants import apply_method2
from src.errors import DatasetIoError, ModeMismatchError, SchemaMismatchError
from src.gnn.ablation import run_ablation
from src.gnn.params import AblationVariant, LossMode, StructureMode, TrainConfig
from src.gnn.selector import GatMlpSelector, graphs_for, load_gat_selector, save_gat_selector
from src.solvers.models import SolverId
from tests.conftest import ASSETS, labeled, synthetic_graphs, synthetic_instances


@pytest.fixture(scope="module")
def graphs():
    return synthetic_graphs(24, seed=5)


@pytest.fixture(scope="module")
def instances():
    return synthetic_instances(24, seed=5)


@pytest.fixture
def cfg():
    """A small, quick configuration."""
    return TrainConfig(
        hidden_dim=8, attention_heads=2, max_epochs=4, batch_size=8, dropout=0.0, seed=1
    )


@pytest.fixture
def fitted(instances, graphs, cfg, mock_logger):
    return GatMlpSelector.fit(DatasetVariant.METHOD2, apply_method2(instances), cfg, mock_logger, graphs)


def test_single_label_selector_predicts_one_solver(fitted, instances, graphs):
    predicted = fitted.predict_instances(instances, graphs)

    assert len(predicted) == 24
    assert all(len(winners) == 1 for winners in predicted)
    assert fitted.config.loss_mode == LossMode.SOFTMAX
    assert 1 <= fitted.best_epoch <= 4


def test_predict_graph_computes_features(fitted, graphs, instances):
    g = graphs["g000"]

    from_graph = fitted.predict_graph(g)

    assert from_graph == fitted.predict_instances(instances[:1], graphs)[0]


def test_fit_is_deterministic(fitted, instances, graphs, cfg, mock_logger):
    again = GatMlpSelector.fit(DatasetVariant.METHOD2, apply_method2(instances), cfg, mock_logger, graphs)
    rows = feature_matrix(instances)
    ordered = list(graphs.values())

    assert np.array_equal(fitted.logits(ordered, rows), again.logits(ordered, rows))


def test_method3_trains_on_winner_sets(instances, graphs, cfg, mock_logger):
    selector = GatMlpSelector.fit(DatasetVariant.METHOD3, instances, cfg, mock_logger, graphs)

    predicted = selector.predict_instances(instances, graphs)

    assert selector.config.loss_mode == LossMode.SIGMOID
    assert all(1 <= len(winners) <= len(SolverId) for winners in predicted)


def test_softmax_on_method3_is_rejected(instances, graphs, cfg, mock_logger):
    with pytest.raises(ModeMismatchError):
        GatMlpSelector.fit(
            DatasetVariant.METHOD3, instances, cfg, mock_logger, graphs, LossMode.SOFTMAX
        )


def test_sigmoid_on_single_label_rows(instances, graphs, cfg, mock_logger):
    selector = GatMlpSelector.fit(
        DatasetVariant.METHOD2, apply_method2(instances), cfg, mock_logger, graphs, LossMode.SIGMOID
    )

    assert selector.config.loss_mode == LossMode.SIGMOID
    assert all(len(w) == 1 for w in selector.predict_instances(instances, graphs))


def test_checkpoint_round_trip(tmp_path, fitted, instances, graphs):
    path = tmp_path / "gat.json"

    save_gat_selector(fitted, path)
    loaded = load_gat_selector(path)
    rows = feature_matrix(instances)
    ordered = list(graphs.values())

    assert loaded.variant == DatasetVariant.METHOD2
    assert loaded.training_log == fitted.training_log
    assert np.allclose(loaded.logits(ordered, rows), fitted.logits(ordered, rows))


def test_checkpoint_with_other_version(tmp_path, fitted):
    path = tmp_path / "gat.json"
    save_gat_selector(fitted, path)
    document = json.loads(path.read_text())
    document["version"] = 2
    path.write_text(json.dumps(document))

    with pytest.raises(SchemaMismatchError):
        load_gat_selector(path)


def test_checkpoint_with_misshapen_block(tmp_path, fitted):
    path = tmp_path / "gat.json"
    save_gat_selector(fitted, path)
    document = json.loads(path.read_text())
    document["blocks"]["clf.b"]["shape"] = [5]
    path.write_text(json.dumps(document))

    with pytest.raises(SchemaMismatchError):
        load_gat_selector(path)


def test_missing_checkpoint(tmp_path):
    with pytest.raises(DatasetIoError):
        load_gat_selector(tmp_path / "absent.json")


def test_graphs_come_from_graph_refs():
    instance = labeled("k4", [SolverId.COLOR_BB]).model_copy(
        update={"graph_ref": str(ASSETS / "graphs" / "k4.clq")}
    )

    assert graphs_for([instance])[0].edge_count == 6


def test_graphs_for_unknown_instance():
    with pytest.raises(DatasetIoError):
        graphs_for([labeled("nowhere", [SolverId.COLOR_BB])])


def test_statistics_only_selector_needs_no_graphs(instances, cfg, mock_logger, tmp_path):
    rows = apply_method2(instances)
    assert all(row.graph_ref is None for row in rows)
    mlp_only = cfg.model_copy(update={"structure_mode": StructureMode.OFF})

    selector = GatMlpSelector.fit(DatasetVariant.METHOD2, rows, mlp_only, mock_logger)
    save_gat_selector(selector, tmp_path / "mlp.json")
    restored = load_gat_selector(tmp_path / "mlp.json")

    predicted = restored.predict_instances(rows)
    assert predicted == selector.predict_instances(rows)
    assert all(len(winners) == 1 for winners in predicted)


def test_ablation_runs_every_variant(instances, graphs, cfg, mock_logger):
    rows = apply_method2(instances)

    results = run_ablation(rows[:15], rows[15:], cfg, mock_logger, graphs)

    assert [row.variant for row in results] == list(AblationVariant)
    assert all(0.0 <= row.accuracy <= 1.0 for row in results)
    assert all(row.best_epoch >= 1 for row in results)
