"""
Classification losses on logits and their gradients.
"""

import numpy as np
import numpy.typing as npt
from scipy.special import expit, log_softmax, softmax

from src.errors import ModeMismatchError
from src.gnn.params import LossMode

Array = npt.NDArray[np.float64]


def _check_targets(logits: Array, targets: npt.ArrayLike, mode: LossMode) -> npt.NDArray:
    targets = np.asarray(targets)
    if mode == LossMode.SOFTMAX:
        if targets.ndim != 1 or targets.shape[0] != logits.shape[0]:
            raise ModeMismatchError(
                f"softmax loss takes one class index per row, got shape {targets.shape}"
            )
        return targets.astype(np.int64)
    if targets.shape != logits.shape:
        raise ModeMismatchError(
            f"sigmoid loss takes a target vector per row, got shape {targets.shape}"
        )
    return targets.astype(np.float64)


def loss(logits: npt.ArrayLike, targets: npt.ArrayLike, mode: LossMode) -> float:
    """
    Mean cross-entropy over the batch (softmax mode) or mean binary
    cross-entropy over every row and class (sigmoid mode).

    Args:
        logits (npt.ArrayLike): (B, C) logits.
        targets (npt.ArrayLike): (B,) class indices or (B, C) 0/1 targets.
        mode (LossMode): Loss mode.

    Returns:
        float: The loss.

    Raises:
        ModeMismatchError: If the targets do not fit the mode.
    """
    logits = np.atleast_2d(np.asarray(logits, dtype=np.float64))
    targets = _check_targets(logits, targets, mode)
    if mode == LossMode.SOFTMAX:
        log_probs = log_softmax(logits, axis=1)
        return float(-np.mean(log_probs[np.arange(len(targets)), targets]))
    # log(1 + e^x) - x t, written to stay finite for large |x|
    elementwise = np.logaddexp(0.0, logits) - logits * targets
    return float(np.mean(elementwise))


def loss_gradient(logits: npt.ArrayLike, targets: npt.ArrayLike, mode: LossMode) -> Array:
    """Gradient of loss() with respect to the logits."""
    logits = np.atleast_2d(np.asarray(logits, dtype=np.float64))
    targets = _check_targets(logits, targets, mode)
    if mode == LossMode.SOFTMAX:
        grad = softmax(logits, axis=1)
        grad[np.arange(len(targets)), targets] -= 1.0
        return grad / logits.shape[0]
    return (expit(logits) - targets) / logits.size


def predict_classes(logits: npt.ArrayLike) -> npt.NDArray[np.int64]:
    return np.argmax(np.atleast_2d(logits), axis=1)


def predict_label_sets(logits: npt.ArrayLike) -> npt.NDArray[np.bool_]:
    """
    Labels with a positive logit; the argmax label when there is none.
    """
    logits = np.atleast_2d(np.asarray(logits, dtype=np.float64))
    chosen = logits > 0
    empty = ~chosen.any(axis=1)
    chosen[empty, np.argmax(logits[empty], axis=1)] = True
    return chosen
