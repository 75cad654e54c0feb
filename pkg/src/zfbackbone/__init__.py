"""Zero-forcing learning backbones for graph sparsification."""

from .graph_core import (
    ComponentLabeling,
    DistanceMap,
    Graph,
    UNREACHABLE,
    average_degree,
    bfs_distances,
    canonical_edge,
    connected_components,
    density,
    is_spanning_forest,
    spanning_tree_count,
    spanning_tree_count_crosscheck,
    spanning_tree_upper_bound,
)
from .zero_forcing import (
    ForcingRecord,
    GraphTooLargeError,
    LeaderSet,
    apply_zero_forcing,
    greedy_zfs,
    is_zfs,
    minimum_zfs_bruteforce,
    zeta,
)
from .backbone import (
    Backbone,
    METHOD_DISTANCE,
    METHOD_RANDOM_TREE,
    METHOD_ZFS,
    MonotonicityReport,
    distance_backbone,
    random_spanning_tree,
    verify_zfs_backbone_monotonicity,
    zfs_backbone,
)
from .controllability import (
    RankEstimate,
    SystemSample,
    controllability_matrix,
    derived_seed,
    dl_vectors,
    generic_rank,
    numeric_rank,
    sample_system,
)
from .dataset_io import (
    DatasetBundle,
    DatasetFormatError,
    StatsReport,
    compute_stats,
    read_dataset,
    read_leaders,
    sparsify_dataset,
    write_dataset,
    write_leaders,
)

__version__ = "0.1.0"
