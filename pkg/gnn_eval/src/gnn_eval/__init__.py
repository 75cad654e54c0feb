"""GNN classification harness for original-vs-backbone comparisons."""

from .data import (
    DEGREE_CAP,
    GraphRecord,
    LoadedDataset,
    build_features,
    degrees,
    load_dataset,
    read_leader_log,
)
from .models import (
    MODEL_KINDS,
    ExperimentConfig,
    SortPoolClassifier,
    build_model,
)
from .train import CVResult, FoldResult, compare, effective_sort_k, run_cv

__version__ = "0.1.0"

__all__ = [
    "DEGREE_CAP",
    "GraphRecord",
    "LoadedDataset",
    "build_features",
    "degrees",
    "load_dataset",
    "read_leader_log",
    "MODEL_KINDS",
    "ExperimentConfig",
    "SortPoolClassifier",
    "build_model",
    "CVResult",
    "FoldResult",
    "compare",
    "effective_sort_k",
    "run_cv",
    "__version__",
]
