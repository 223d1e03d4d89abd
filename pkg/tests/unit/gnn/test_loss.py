import math

import numpy as np
import pytest

from src.errors import ModeMismatchError
from src.gnn.loss import loss, loss_gradient, predict_classes, predict_label_sets
from src.gnn.params import LossMode


def test_cross_entropy_of_uniform_logits():
    assert loss(np.zeros((3, 4)), [0, 2, 3], LossMode.SOFTMAX) == pytest.approx(math.log(4))


def test_binary_cross_entropy_at_zero_logits():
    targets = [[1, 0, 0, 1], [0, 0, 1, 0]]

    assert loss(np.zeros((2, 4)), targets, LossMode.SIGMOID) == pytest.approx(math.log(2))


def test_losses_stay_finite_for_large_logits():
    logits = np.array([[800.0, -800.0, 0.0, 0.0]])

    assert loss(logits, [1], LossMode.SOFTMAX) == pytest.approx(1600.0, rel=1e-6)
    assert np.isfinite(loss(logits, [[0, 1, 0, 0]], LossMode.SIGMOID))


@pytest.mark.parametrize(
    ("mode", "targets"),
    [(LossMode.SOFTMAX, [1, 3]), (LossMode.SIGMOID, [[1, 0, 1, 0], [0, 0, 0, 1]])],
)
def test_gradient_matches_finite_differences(mode, targets):
    logits = np.random.default_rng(0).normal(size=(2, 4))
    step = 1e-6
    numeric = np.zeros_like(logits)
    for index in np.ndindex(logits.shape):
        shifted = logits.copy()
        shifted[index] += step
        plus = loss(shifted, targets, mode)
        shifted[index] -= 2 * step
        numeric[index] = (plus - loss(shifted, targets, mode)) / (2 * step)

    assert np.allclose(loss_gradient(logits, targets, mode), numeric, atol=1e-8)


def test_mode_mismatch():
    with pytest.raises(ModeMismatchError):
        loss(np.zeros((2, 4)), [[1, 0, 0, 0], [0, 1, 0, 0]], LossMode.SOFTMAX)
    with pytest.raises(ModeMismatchError):
        loss(np.zeros((2, 4)), [0, 1], LossMode.SIGMOID)


def test_predictions():
    logits = np.array([[0.5, -1.0, 2.0, 0.1], [-3.0, -0.2, -0.5, -1.0]])

    assert predict_classes(logits).tolist() == [2, 1]
    assert predict_label_sets(logits).tolist() == [
        [True, False, True, True],
        [False, True, False, False],
    ]
