import numpy as np
import pandas as pd
import pytest

from src.errors import EmptyDataError, SingleClassError
from src.gnn.gradcheck import random_sample
from src.gnn.params import LossMode, ModelShape, StructureMode, TrainConfig
from src.gnn.training import train, write_training_log


def toy_samples(count: int, cfg: TrainConfig):
    shape = ModelShape.from_config(cfg)
    rng = np.random.default_rng(11)
    return [random_sample(rng, shape, nodes=5) for _ in range(count)]


@pytest.fixture
def overfit_config():
    """A dropout-free MLP-only model that can memorize a handful of rows."""
    return TrainConfig(
        hidden_dim=16,
        attention_heads=1,
        dropout=0.0,
        learning_rate=0.05,
        weight_decay=0.0,
        batch_size=8,
        max_epochs=300,
        patience=300,
        validation_fraction=0.0,
        structure_mode=StructureMode.OFF,
    )


def test_training_memorizes_toy_rows(overfit_config, mock_logger):
    samples = toy_samples(8, overfit_config)

    result = train(samples, [0, 1, 2, 3, 0, 1, 2, 3], overfit_config, mock_logger)

    assert result.log[-1].val_accuracy == 1.0
    assert result.best_epoch == len(result.log)
    assert result.log[-1].train_loss < result.log[0].train_loss
    mock_logger.info.assert_called_once()


def test_training_is_deterministic(mock_logger):
    cfg = TrainConfig(hidden_dim=4, attention_heads=2, max_epochs=3, batch_size=3, seed=5)
    samples = toy_samples(10, cfg)
    targets = [0, 1, 2, 3, 0, 1, 2, 3, 0, 1]

    first = train(samples, targets, cfg, mock_logger)
    second = train(samples, targets, cfg, mock_logger)

    assert first.log == second.log
    for name, block in first.params.blocks.items():
        assert np.array_equal(block, second.params.blocks[name])


def test_training_stops_after_patience(mock_logger):
    cfg = TrainConfig(
        hidden_dim=4,
        attention_heads=1,
        learning_rate=1e-12,
        max_epochs=50,
        patience=2,
        validation_fraction=0.0,
        dropout=0.0,
    )
    samples = toy_samples(8, cfg)

    result = train(samples, [0, 1, 2, 3, 0, 1, 2, 3], cfg, mock_logger)

    assert len(result.log) == 4
    assert result.best_epoch == 1


def test_training_with_sigmoid_targets(mock_logger):
    cfg = TrainConfig(
        hidden_dim=4, attention_heads=2, max_epochs=2, loss_mode=LossMode.SIGMOID
    )
    samples = toy_samples(6, cfg)
    targets = np.eye(4)[[0, 1, 2, 3, 0, 1]]
    targets[0, 3] = 1.0

    result = train(samples, targets, cfg, mock_logger)

    assert 1 <= result.best_epoch <= 2
    assert 0.0 <= result.best_val_macro_f1 <= 1.0


def test_training_needs_rows(mock_logger):
    with pytest.raises(EmptyDataError):
        train([], [], TrainConfig(), mock_logger)


def test_training_needs_two_classes(mock_logger):
    cfg = TrainConfig(hidden_dim=4, attention_heads=1, validation_fraction=0.0)

    with pytest.raises(SingleClassError):
        train(toy_samples(4, cfg), [2, 2, 2, 2], cfg, mock_logger)


def test_training_log_csv(tmp_path, mock_logger):
    cfg = TrainConfig(hidden_dim=4, attention_heads=1, max_epochs=2, patience=5)
    result = train(toy_samples(6, cfg), [0, 1, 0, 1, 2, 3], cfg, mock_logger)
    path = tmp_path / "log.csv"

    write_training_log(result.log, path)
    frame = pd.read_csv(path)

    assert list(frame.columns) == ["epoch", "train_loss", "val_accuracy", "val_macro_f1"]
    assert frame["epoch"].tolist() == list(range(1, len(result.log) + 1))
