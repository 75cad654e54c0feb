"""
Building a learning backbone
============================

Sparsify the Petersen graph down to a spanning tree that keeps the
greedy leaders a zero forcing set, then confirm the controllability
guarantee numerically.
"""

# The backbone keeps two kinds of edges: the edges along which forces
# fired, and just enough extra "connector" edges to make the result a
# spanning tree of each component.
from zfbackbone import (
    Graph,
    generic_rank,
    greedy_zfs,
    verify_zfs_backbone_monotonicity,
    zfs_backbone,
)

# The Petersen graph: 10 vertices, 15 edges, vertex degrees all 3.
outer = [(i, (i + 1) % 5) for i in range(5)]
inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
spokes = [(i, 5 + i) for i in range(5)]
petersen = Graph(10, outer + inner + spokes)
print("host graph:", petersen.n, "vertices,", petersen.num_edges, "edges")

# Step 1: pick leaders greedily until they form a zero forcing set.
leaders = greedy_zfs(petersen)
print("greedy leaders:", leaders)

# Step 2: run the forcing process and keep the force edges, then add
# connectors so every component becomes one tree.
backbone = zfs_backbone(petersen)
force_edges = set(backbone.record.force_edges)
connectors = set(backbone.kept_edges) - force_edges
print("force edges  :", sorted(force_edges))
print("connectors   :", sorted(connectors))
print("backbone size:", len(backbone.kept_edges), "edges")

# A spanning tree of a connected 10-vertex graph has exactly 9 edges,
# and |force edges| = n - |leaders| because every non-leader is forced
# exactly once.
assert len(backbone.kept_edges) == petersen.n - 1
assert len(force_edges) == petersen.n - len(leaders)

# Step 3: the same leaders still force everything on the sparsified
# graph, and on any subgraph of the host that contains the backbone.
report = verify_zfs_backbone_monotonicity(petersen, backbone, trials=50, seed=0)
print("monotonicity trials passed:", report.trials - len(report.failures), "/", report.trials)

# Step 4: the numeric check behind the guarantee. With leader-injected
# inputs, random symmetric weightings of the backbone give a full-rank
# controllability matrix.
estimate = generic_rank(backbone.as_graph(), leaders, trials=10, seed=0)
print("generic rank on the backbone:", estimate.rank, "of", petersen.n)
print("zeta lower bound respected  :", not estimate.zeta_violated)
