"""
Toolkit configuration settings using Pydantic BaseSettings.

This module defines every configurable default: solver budgets, labeling
tolerances, split and cross-validation parameters, corpus generation and
the GAT-MLP training hyperparameters. Settings can be overridden using
environment variables prefixed with CLIQUE_SELECT_ or a .env file.
"""

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """
    Toolkit settings with environment variable support.
    """

    model_config = SettingsConfigDict(
        env_prefix="CLIQUE_SELECT_", env_file=".env", extra="ignore"
    )

    # Application configuration
    app_name: str = "clique-select"
    app_description: str = (
        "Instance-aware algorithm selection for the maximum clique problem."
    )
    app_version: str = "0.1.0"
    log_level: str = "INFO"

    # File System Configuration
    output_directory: str = "out"
    file_encoding: str = "utf-8"

    # Solver Configuration
    time_limit_s: float = 10.0
    node_limit: int | None = None

    # Labeling Configuration
    tie_epsilon_s: float = 0.05
    trivial_threshold_s: float = 0.001  # all four faster than this: timing noise

    # Split and Cross-Validation Configuration
    split_ratio: float = 0.8
    cv_folds: int = 5
    seed: int = 0
    jobs: int = 1

    # Corpus Configuration
    corpus_count: int = 300
    corpus_min_nodes: int = 20
    corpus_max_nodes: int = 2000
    corpus_min_density: float = 0.01
    corpus_max_density: float = 0.95

    # GAT-MLP Training Configuration
    learning_rate: float = 0.001
    weight_decay: float = 1e-4
    hidden_dim: int = 32
    attention_heads: int = 4
    dropout: float = 0.5
    batch_size: int = 16
    max_epochs: int = 50
    patience: int = 10
    validation_fraction: float = 0.1

    # Gradient Check Configuration
    gradcheck_seeds: int = 10
    gradcheck_step: float = 1e-5
    gradcheck_tolerance: float = 1e-4
