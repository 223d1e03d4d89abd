import numpy as np
import pytest

from src.errors import TooFewInstancesError
from src.selectors.families import ModelFamily, default_grid
from src.selectors.method3 import combine_binary_predictions
from src.selectors.search import cross_validate_grid, stratified_folds
from src.solvers.models import SolverId


@pytest.fixture
def separable():
    """Two classes split at x = 0 with a gap around it."""
    rng = np.random.default_rng(1)
    X = np.r_[rng.uniform(-2, -0.5, 15), rng.uniform(0.5, 2, 15)].reshape(-1, 1)
    y = np.repeat([0, 1], 15)
    return X, y


def test_stratified_folds_are_balanced():
    y = np.array([0] * 11 + [1] * 7 + [2] * 3)

    assignment = stratified_folds(y, 5, seed=2)

    sizes = np.bincount(assignment, minlength=5)
    assert sizes.max() - sizes.min() <= 1
    for cls in range(3):
        per_fold = np.bincount(assignment[y == cls], minlength=5)
        assert per_fold.max() - per_fold.min() <= 1


def test_stratified_folds_are_seeded():
    y = np.arange(20) % 3

    assert np.array_equal(stratified_folds(y, 4, 9), stratified_folds(y, 4, 9))


def test_default_grids_carry_the_seed():
    assert len(default_grid(ModelFamily.DT)) == 12
    assert all(params["seed"] == 5 for params in default_grid(ModelFamily.RF, seed=5))
    assert default_grid(ModelFamily.KNN) == [{"k": 1}, {"k": 3}, {"k": 5}, {"k": 7}]


def test_grid_search_scores_every_configuration(separable, mock_logger):
    X, y = separable
    grid = [{"k": 1}, {"k": 3}, {"k": 29}]

    result = cross_validate_grid(X, y, ModelFamily.KNN, grid, folds=3, seed=0, logger=mock_logger)

    assert [score.params for score in result.scores] == grid
    assert result.best_params == {"k": 1}
    assert result.scores[0].mean_accuracy == 1.0
    assert result.scores[2].fold_accuracies == [0.0, 0.0, 0.0]
    assert len(result.fold_assignment) == 30
    assert mock_logger.debug.call_count == 3


def test_grid_search_keeps_first_of_equal_scores(separable):
    X, y = separable

    result = cross_validate_grid(
        X, y, ModelFamily.DT, [{"max_depth": 1}, {"max_depth": 4}], folds=3
    )

    assert result.scores[0].mean_accuracy == result.scores[1].mean_accuracy
    assert result.best_params == {"max_depth": 1}


def test_grid_search_needs_enough_rows():
    with pytest.raises(TooFewInstancesError):
        cross_validate_grid([[0.0], [1.0]], [0, 1], ModelFamily.DT, folds=5)


def test_combine_binary_predictions():
    positives = [[True, False, True, False], [False, False, False, False]]
    scores = [[0.9, 0.1, 0.7, 0.0], [0.2, 0.4, 0.4, 0.1]]

    assert combine_binary_predictions(positives, scores) == [
        (SolverId.COLOR_BB, SolverId.DYN_ORDER_BB),
        (SolverId.DEGEN_BB,),
    ]
