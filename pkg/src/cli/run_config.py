"""
Per-invocation run configuration.

A RunConfig merges three sources, later ones winning: the Settings
defaults (environment and .env), an optional JSON config file with the
same keys, and the command-line flags.
"""

import json
from pathlib import Path
from typing import Any, Self

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from src.config import Settings
from src.errors import DatasetIoError, SchemaMismatchError
from src.gnn.params import AblationVariant, TrainConfig
from src.solvers.models import Budget

TRAIN_KEY = "train"
INPUT_DIR_ARGUMENTS = ("graphs",)


class RunConfig(BaseModel):
    """
    Settings of one command run.

    Args:
        out (Path): Output directory.
        seed (int): Seed of splitting, tuning, training and generation.
        jobs (int): Worker processes for per-graph work.
        time_limit_s (float): Per-solver time limit.
        node_limit (int | None): Per-solver search-tree node limit.
        tie_epsilon_s (float): Labeling timing tolerance.
        trivial_threshold_s (float): Trivial-instance threshold.
        ratio (float): Train fraction of the split.
        folds (int): Cross-validation folds.
        corpus_count (int): Graphs in a generated corpus.
        corpus_node_range (tuple[int, int]): Node count range of generated graphs.
        corpus_density_range (tuple[float, float]): Density range of generated graphs.
        train (TrainConfig): GAT-MLP training configuration.
        input_dirs (list[Path]): Input directories the command reads.
    """

    model_config = ConfigDict(extra="forbid")

    out: Path
    seed: int
    jobs: int = Field(..., ge=1)
    time_limit_s: float = Field(..., gt=0)
    node_limit: int | None = Field(default=None, ge=1)
    tie_epsilon_s: float = Field(..., ge=0)
    trivial_threshold_s: float = Field(..., ge=0)
    ratio: float = Field(..., gt=0, lt=1)
    folds: int = Field(..., ge=2)
    corpus_count: int = Field(..., ge=1)
    corpus_node_range: tuple[int, int]
    corpus_density_range: tuple[float, float]
    train: TrainConfig
    input_dirs: list[Path] = Field(default_factory=list)

    @field_validator("input_dirs")
    @classmethod
    def _directories_exist(cls, directories: list[Path]) -> list[Path]:
        missing = [str(d) for d in directories if not d.is_dir()]
        if missing:
            raise ValueError(f"input directories do not exist: {missing}")
        return directories

    @model_validator(mode="after")
    def _train_seed(self) -> Self:
        self.train = self.train.model_copy(update={"seed": self.seed})
        return self

    @property
    def budget(self) -> Budget:
        return Budget(time_limit_s=self.time_limit_s, node_limit=self.node_limit)

    @staticmethod
    def defaults(settings: Settings) -> dict[str, Any]:
        return {
            "out": settings.output_directory,
            "seed": settings.seed,
            "jobs": settings.jobs,
            "time_limit_s": settings.time_limit_s,
            "node_limit": settings.node_limit,
            "tie_epsilon_s": settings.tie_epsilon_s,
            "trivial_threshold_s": settings.trivial_threshold_s,
            "ratio": settings.split_ratio,
            "folds": settings.cv_folds,
            "corpus_count": settings.corpus_count,
            "corpus_node_range": (settings.corpus_min_nodes, settings.corpus_max_nodes),
            "corpus_density_range": (settings.corpus_min_density, settings.corpus_max_density),
            TRAIN_KEY: {
                "learning_rate": settings.learning_rate,
                "weight_decay": settings.weight_decay,
                "hidden_dim": settings.hidden_dim,
                "attention_heads": settings.attention_heads,
                "dropout": settings.dropout,
                "batch_size": settings.batch_size,
                "max_epochs": settings.max_epochs,
                "patience": settings.patience,
                "validation_fraction": settings.validation_fraction,
            },
        }

    @classmethod
    def from_sources(
        cls,
        settings: Settings,
        config_file: Path | None = None,
        overrides: dict[str, Any] | None = None,
    ) -> Self:
        """
        Merge settings, the config file and flag overrides.

        None-valued overrides are ignored, so flags that were not given
        keep the lower-priority value. The "train" key merges per field.

        Args:
            settings (Settings): Environment-backed defaults.
            config_file (Path | None): JSON document with RunConfig keys.
            overrides (dict[str, Any] | None): Values from the command line.

        Returns:
            RunConfig: The validated configuration.

        Raises:
            DatasetIoError: If the config file cannot be read.
            SchemaMismatchError: If the config file is not a JSON object.
            ValidationError: If a merged value is invalid.
        """
        merged = cls.defaults(settings)
        layers = [cls.read_config_file(config_file)] if config_file else []
        layers.append(overrides or {})
        for layer in layers:
            for key, value in layer.items():
                if value is None:
                    continue
                if key == TRAIN_KEY:
                    merged[TRAIN_KEY].update(
                        {name: v for name, v in value.items() if v is not None}
                    )
                else:
                    merged[key] = value
        return cls.model_validate(merged)

    @staticmethod
    def read_config_file(path: Path) -> dict[str, Any]:
        try:
            document = json.loads(path.read_text(encoding="utf-8"))
        except OSError as e:
            raise DatasetIoError(f"cannot read config file {path}: {e}") from e
        except json.JSONDecodeError as e:
            raise SchemaMismatchError(f"config file {path} is not JSON: {e}") from e
        if not isinstance(document, dict):
            raise SchemaMismatchError(f"config file {path} must hold a JSON object")
        return document


def overrides_from(arguments: dict[str, Any]) -> dict[str, Any]:
    """
    RunConfig overrides from parsed command-line arguments.

    Arguments named like a RunConfig field override it, those named like a
    TrainConfig field go under "train", `--ablation` sets the encoder
    modes, and directory arguments are collected into input_dirs.
    """
    values = {name: value for name, value in arguments.items() if value is not None}
    overrides = {name: values.pop(name) for name in list(values) if name in RunConfig.model_fields}
    train = {name: values[name] for name in TrainConfig.model_fields if name in values}
    if "ablation" in values:
        structure_mode, stat_encoder = AblationVariant(values["ablation"]).encoders
        train.update(structure_mode=structure_mode, stat_encoder=stat_encoder)
    overrides[TRAIN_KEY] = train
    directories = [Path(values[name]) for name in INPUT_DIR_ARGUMENTS if name in values]
    if directories:
        overrides["input_dirs"] = directories
    return overrides
