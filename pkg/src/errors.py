"""
Domain exceptions.

Every failure the toolkit reports deliberately is a subclass of
CliqueSelectError; the CLI maps them to exit codes in src.cli.error_map.
"""


class CliqueSelectError(Exception):
    pass


# Graphs
class GraphError(CliqueSelectError):
    pass


class MalformedHeaderError(GraphError):
    pass


class MalformedLineError(GraphError):
    pass


class NodeOutOfRangeError(GraphError):
    pass


class EmptyGraphError(GraphError):
    pass


# Features
class FeatureError(CliqueSelectError):
    pass


class TooFewRowsError(FeatureError):
    pass


# Datasets
class DatasetError(CliqueSelectError):
    pass


class AllUnsolvedError(DatasetError):
    pass


class EmptyResultError(DatasetError):
    pass


class TooFewInstancesError(DatasetError):
    pass


class InvalidSpecError(DatasetError):
    pass


class DatasetIoError(DatasetError):
    pass


class SchemaMismatchError(DatasetError):
    pass


# Learning
class ModelError(CliqueSelectError):
    pass


class EmptyDataError(ModelError):
    pass


class NonFiniteFeatureError(ModelError):
    pass


class UnfitModelError(ModelError):
    pass


class KTooLargeError(ModelError):
    pass


class SingleClassError(ModelError):
    pass


class ShapeMismatchError(ModelError):
    pass


class ModeMismatchError(ModelError):
    pass


class BothEncodersOffError(ModelError):
    pass


# Metrics
class MetricError(CliqueSelectError):
    pass


class LengthMismatchError(MetricError):
    pass


class LabelOutOfRangeError(MetricError):
    pass


class EmptyMatrixError(MetricError):
    pass


class VariantMismatchError(MetricError):
    pass


# CLI
class NoInputsError(CliqueSelectError):
    pass
