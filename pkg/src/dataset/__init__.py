from src.dataset.corpus import corpus_generate, default_corpus_specs
from src.dataset.labeling import (
    is_trivial,
    label_dataset,
    label_distribution,
    label_instance,
)
from src.dataset.models import (
    BinaryDataset,
    CorpusSpec,
    DatasetManifest,
    DatasetVariant,
    GeneratedGraph,
    GeneratorFamily,
    LabeledInstance,
    Split,
)
from src.dataset.split import train_test_split
from src.dataset.variants import apply_method1, apply_method2, apply_method3

__all__ = [
    "BinaryDataset",
    "CorpusSpec",
    "DatasetManifest",
    "DatasetVariant",
    "GeneratedGraph",
    "GeneratorFamily",
    "LabeledInstance",
    "Split",
    "apply_method1",
    "apply_method2",
    "apply_method3",
    "corpus_generate",
    "default_corpus_specs",
    "is_trivial",
    "label_dataset",
    "label_distribution",
    "label_instance",
    "train_test_split",
]
