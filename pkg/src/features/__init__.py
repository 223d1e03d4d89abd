from src.features.extraction import (
    assortativity,
    assortativity_with_flag,
    avg_local_clustering,
    extract_global,
    global_clustering,
    local_clustering,
    node_features,
)
from src.features.models import GlobalFeatures, MinMaxNormalizer, ZScoreNormalizer
from src.features.normalization import (
    fit_node_normalizer,
    minmax_fit_apply,
    zscore_fit_apply,
)

__all__ = [
    "GlobalFeatures",
    "MinMaxNormalizer",
    "ZScoreNormalizer",
    "assortativity",
    "assortativity_with_flag",
    "avg_local_clustering",
    "extract_global",
    "fit_node_normalizer",
    "global_clustering",
    "local_clustering",
    "minmax_fit_apply",
    "node_features",
    "zscore_fit_apply",
]
