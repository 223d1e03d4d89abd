import json

import numpy as np
import pytest

from src.constants import FEATURE_COUNT
from src.dataset.models import DatasetVariant, feature_matrix, label_vector
from src.dataset.variants import apply_method1, apply_method2
from src.errors import DatasetIoError, SchemaMismatchError
from src.selectors.families import ModelFamily
from src.selectors.selector import ClassicalSelector, load_selector, save_selector
from src.solvers.models import SolverId
from tests.conftest import synthetic_instances

FAST_PARAMS = {
    ModelFamily.DT: {"max_depth": None, "min_samples_leaf": 1},
    ModelFamily.RF: {"n_trees": 15, "seed": 0},
    ModelFamily.KNN: {"k": 3},
    ModelFamily.SVM: {"c": 1.0, "epochs": 30},
}


@pytest.fixture(scope="module")
def instances():
    """Forty learnable instances, eight of them with two winners."""
    return synthetic_instances(40, seed=3)


@pytest.mark.parametrize("family", list(ModelFamily))
def test_single_label_selector_predicts_one_solver(family, instances, mock_logger):
    rows = apply_method2(instances)

    selector = ClassicalSelector.fit(
        family, DatasetVariant.METHOD2, rows, mock_logger, FAST_PARAMS[family]
    )
    predicted = selector.predict_instances(rows)

    assert all(len(winners) == 1 for winners in predicted)
    assert selector.predict_labels(feature_matrix(rows)).shape == (len(rows),)
    assert family.needs_scaling == (selector.normalizer is not None)


@pytest.mark.parametrize("family", [ModelFamily.DT, ModelFamily.KNN])
def test_selector_learns_training_rows(family, instances, mock_logger):
    rows = apply_method2(instances)
    params = {"k": 1} if family == ModelFamily.KNN else FAST_PARAMS[family]

    selector = ClassicalSelector.fit(family, DatasetVariant.METHOD2, rows, mock_logger, params)
    accuracy = np.mean(selector.predict_labels(feature_matrix(rows)) == label_vector(rows))

    assert accuracy == 1.0


def test_selector_tunes_when_no_hyperparameters(instances, mock_logger):
    rows = apply_method1(instances)

    selector = ClassicalSelector.fit(
        ModelFamily.KNN, DatasetVariant.METHOD1, rows, mock_logger, folds=4, seed=1
    )

    assert len(selector.search) == 1
    assert selector.hyperparameters == selector.search[0].best_params
    assert selector.hyperparameters in [{"k": k} for k in (1, 3, 5, 7)]


def test_selector_uses_first_grid_entry_on_tiny_data(instances, mock_logger):
    selector = ClassicalSelector.fit(
        ModelFamily.KNN, DatasetVariant.METHOD2, apply_method2(instances)[:3], mock_logger
    )

    assert selector.hyperparameters == {"k": 1}
    assert selector.search == []


@pytest.mark.parametrize("family", [ModelFamily.DT, ModelFamily.SVM])
def test_method3_selector_predicts_sets(family, instances, mock_logger):
    selector = ClassicalSelector.fit(
        family, DatasetVariant.METHOD3, instances, mock_logger, FAST_PARAMS[family]
    )

    predicted = selector.predict_instances(instances)
    positives = selector.binary_predictions(feature_matrix(instances))

    assert selector.model is None
    assert list(selector.method3.models) == list(SolverId)
    assert all(1 <= len(winners) <= 4 for winners in predicted)
    assert positives.shape == (40, 4)


def test_method3_tuning_shares_one_configuration(instances, mock_logger):
    selector = ClassicalSelector.fit(
        ModelFamily.KNN, DatasetVariant.METHOD3, instances, mock_logger, folds=3
    )

    assert len(selector.search) == len(SolverId)
    assert selector.hyperparameters in [{"k": k} for k in (1, 3, 5, 7)]


def test_feature_importance(instances, mock_logger):
    rows = apply_method2(instances)
    forest = ClassicalSelector.fit(
        ModelFamily.RF, DatasetVariant.METHOD2, rows, mock_logger, FAST_PARAMS[ModelFamily.RF]
    )
    knn = ClassicalSelector.fit(
        ModelFamily.KNN, DatasetVariant.METHOD2, rows, mock_logger, FAST_PARAMS[ModelFamily.KNN]
    )
    tree3 = ClassicalSelector.fit(
        ModelFamily.DT, DatasetVariant.METHOD3, instances, mock_logger, FAST_PARAMS[ModelFamily.DT]
    )

    assert forest.feature_importance().shape == (FEATURE_COUNT,)
    assert forest.feature_importance().sum() == pytest.approx(1.0)
    assert knn.feature_importance() is None
    assert tree3.feature_importance().sum() == pytest.approx(1.0)


@pytest.mark.parametrize("variant", [DatasetVariant.METHOD2, DatasetVariant.METHOD3])
def test_selector_document_round_trip(tmp_path, variant, instances, mock_logger):
    rows = apply_method2(instances) if variant == DatasetVariant.METHOD2 else instances
    selector = ClassicalSelector.fit(
        ModelFamily.SVM, variant, rows, mock_logger, FAST_PARAMS[ModelFamily.SVM]
    )
    path = tmp_path / "svm.json"

    save_selector(selector, path)
    loaded = load_selector(path)

    assert loaded.family == ModelFamily.SVM
    assert loaded.variant == variant
    assert loaded.predict_instances(rows) == selector.predict_instances(rows)


def test_load_selector_rejects_other_version(tmp_path, instances, mock_logger):
    selector = ClassicalSelector.fit(
        ModelFamily.DT, DatasetVariant.METHOD2, apply_method2(instances), mock_logger, {}
    )
    path = tmp_path / "dt.json"
    save_selector(selector, path)
    document = json.loads(path.read_text())
    document["version"] = 99
    path.write_text(json.dumps(document))

    with pytest.raises(SchemaMismatchError):
        load_selector(path)


def test_load_selector_missing_file(tmp_path):
    with pytest.raises(DatasetIoError):
        load_selector(tmp_path / "absent.json")
