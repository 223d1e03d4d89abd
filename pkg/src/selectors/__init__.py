from src.selectors.baseline import ConstantModel, fit_majority
from src.selectors.families import FittedModel, ModelFamily, default_grid, fit_family
from src.selectors.forest import (
    ForestHyperparams,
    ForestModel,
    fit_forest,
    forest_feature_importance,
)
from src.selectors.knn import KnnHyperparams, KnnModel, fit_knn, predict_knn
from src.selectors.method3 import (
    Method3Model,
    combine_binary_predictions,
    fit_method3_binary,
)
from src.selectors.search import GridSearchResult, cross_validate_grid, stratified_folds
from src.selectors.selector import ClassicalSelector, load_selector, save_selector
from src.selectors.svm import LinearSvmModel, SvmHyperparams, fit_svm
from src.selectors.tree import TreeHyperparams, TreeModel, fit_tree, tree_feature_importance

__all__ = [
    "ClassicalSelector",
    "ConstantModel",
    "FittedModel",
    "ForestHyperparams",
    "ForestModel",
    "GridSearchResult",
    "KnnHyperparams",
    "KnnModel",
    "LinearSvmModel",
    "Method3Model",
    "ModelFamily",
    "SvmHyperparams",
    "TreeHyperparams",
    "TreeModel",
    "combine_binary_predictions",
    "cross_validate_grid",
    "default_grid",
    "fit_family",
    "fit_forest",
    "fit_knn",
    "fit_majority",
    "fit_method3_binary",
    "fit_svm",
    "fit_tree",
    "forest_feature_importance",
    "load_selector",
    "predict_knn",
    "save_selector",
    "stratified_folds",
    "tree_feature_importance",
]
