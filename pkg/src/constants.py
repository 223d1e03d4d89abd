"""
Application constants that are not configurable settings.
"""

# Global features, in CSV header order
FEATURE_COLUMNS = (
    "V",
    "E",
    "d_max",
    "d_avg",
    "D",
    "r",
    "T",
    "T_avg",
    "T_max",
    "kappa_avg",
    "kappa",
    "K",
)
FEATURE_COUNT = len(FEATURE_COLUMNS)
NODE_FEATURE_COLUMNS = ("degree", "core_number")

# Graph file formats
DIMACS_SUFFIXES = (".clq", ".col", ".dimacs")
DIMACS_FORMAT_WORDS = ("edge", "col")
EDGE_LIST_COMMENT_PREFIXES = ("%", "#")
GRAPH_FILE_SUFFIXES = (".clq", ".col", ".dimacs", ".edges", ".txt", ".el")

# CSV schemas
INSTANCE_COLUMN = "instance_id"
WINNERS_COLUMN = "winners"
GRAPH_REF_COLUMN = "graph_ref"
TARGET_COLUMN = "target"
WINNER_SEPARATOR = ";"
OUTCOME_COLUMNS = (
    "instance",
    "solver",
    "size",
    "wall_time_s",
    "status",
    "nodes_expanded",
)
TRAINING_LOG_COLUMNS = ("epoch", "train_loss", "val_accuracy", "val_macro_f1")
REPORT_COLUMNS = ("model", "variant", "accuracy", "macro_f1", "weighted_f1", "baseline_accuracy")

# Persisted documents
MANIFEST_SUFFIX = ".manifest.json"
CORPUS_MANIFEST_FILENAME = "corpus.manifest.json"
MODEL_DOCUMENT_VERSION = 1
CHECKPOINT_VERSION = 1
REQUIRED_MANIFEST_KEYS = ("variant", "seed", "ratio", "budget_s", "tie_epsilon_s", "generator_specs")

# Metrics
ZERO_DIVISION_CONVENTION = "undefined precision/recall/F1 reported as 0"
METHOD1_SCORING_NOTE = "Method1 duplicated rows are scored independently"

# Exit codes
EXIT_OK = 0
EXIT_PARTIAL = 1
EXIT_FATAL = 2

# Logging
APP_LOGGER_NAME = "clique_select"
