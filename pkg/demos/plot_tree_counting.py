"""
Counting spanning trees exactly
===============================

How many spanning trees does a sparsifier have to choose from? The
matrix-tree determinant answers exactly, in integer arithmetic, and a
closed-form bound tells us when the count must be small.
"""

# spanning_tree_count evaluates the determinant of a reduced Laplacian
# over the integers, so the answers below are exact, not floating
# point estimates.
from zfbackbone import (
    Graph,
    spanning_tree_count,
    spanning_tree_count_crosscheck,
    spanning_tree_upper_bound,
)

# Cycles are the warm-up: removing any one of the c edges of a cycle
# leaves a path, so C_c has exactly c spanning trees.
for c in (3, 5, 8, 12):
    cycle = Graph(c, [(i, (i + 1) % c) for i in range(c)])
    print(f"C_{c}:", spanning_tree_count(cycle), "spanning trees")

# Complete graphs follow Cayley's formula n^(n-2).
for n in (4, 5, 6, 7):
    complete = Graph(
        n, [(u, v) for u in range(n) for v in range(u + 1, n)]
    )
    print(f"K_{n}:", spanning_tree_count(complete), "spanning trees")

# The Petersen graph is the classic non-trivial test value.
outer = [(i, (i + 1) % 5) for i in range(5)]
inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
spokes = [(i, 5 + i) for i in range(5)]
petersen = Graph(10, outer + inner + spokes)
print("Petersen:", spanning_tree_count(petersen), "spanning trees")

# Two independent eliminations (fraction-free and exact-rational) are
# available as a cross-check; they must always agree.
assert spanning_tree_count_crosscheck(petersen) == spanning_tree_count(petersen)

# For sparse graphs a degree-based bound caps the count without any
# determinant work. It is a sparse-regime tool: on dense graphs like
# K_7 the true count overtakes it.
sparse = Graph(
    8, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 0), (1, 6)]
)
print("sparse 8-vertex graph:", spanning_tree_count(sparse), "trees,",
      "bound", round(spanning_tree_upper_bound(sparse), 2))

k7 = Graph(7, [(u, v) for u in range(7) for v in range(u + 1, 7)])
print("K_7:", spanning_tree_count(k7), "trees,",
      "bound", round(spanning_tree_upper_bound(k7), 2), "(bound exceeded)")
