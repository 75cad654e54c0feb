"""
Distance-preserving sparsification
==================================

The distance backbone keeps a union of shortest-path trees, one per
leader, so every leader sees the exact same distance profile on the
sparse graph as on the host.
"""

import numpy as np

# Distances from the leaders are the signal this variant preserves;
# edges that never lie on a chosen shortest path are dropped.
from zfbackbone import Graph, bfs_distances, distance_backbone

# A 3x4 grid with both diagonals braced in, and two opposite corners
# as leaders. The diagonals create shortcuts the shortest-path trees
# can mostly ignore.
rows, cols = 3, 4
edges = []
for r in range(rows):
    for c in range(cols):
        v = r * cols + c
        if c + 1 < cols:
            edges.append((v, v + 1))
        if r + 1 < rows:
            edges.append((v, v + cols))
        if c + 1 < cols and r + 1 < rows:
            edges.append((v, v + cols + 1))
            edges.append((v + 1, v + cols))
grid = Graph(rows * cols, edges)
leaders = (0, grid.n - 1)
print("host graph:", grid.n, "vertices,", grid.num_edges, "edges")

# Each leader contributes one breadth-first tree; ties between equally
# short predecessors go to the smallest vertex id, which makes the
# construction deterministic.
backbone = distance_backbone(grid, leaders)
sparse = backbone.as_graph()
print("backbone  :", sparse.n, "vertices,", sparse.num_edges, "edges")

# Every leader's distance vector is unchanged, not just approximated.
for leader in leaders:
    before = bfs_distances(grid, leader)
    after = bfs_distances(sparse, leader)
    print(f"leader {leader}: distances preserved =",
          np.array_equal(before.dist, after.dist))

# The edge budget is modest: at most one tree per leader, so no more
# than |leaders| * (n - 1) edges survive, and shared shortest-path
# segments are only stored once.
print("edge budget:", len(leaders) * (grid.n - 1), "kept:", sparse.num_edges)

# Asking for a single spanning tree instead of a union of trees trades
# the exact-distance guarantee for maximal sparsity.
tree = distance_backbone(grid, leaders, as_tree=True)
print("tree variant keeps", len(tree.kept_edges), "edges")
after = bfs_distances(tree.as_graph(), leaders[1])
before = bfs_distances(grid, leaders[1])
print("tree variant still exact for leader", leaders[1], "?",
      np.array_equal(before.dist, after.dist))
