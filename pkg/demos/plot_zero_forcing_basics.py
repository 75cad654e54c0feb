"""
Zero forcing step by step
=========================

A walk through the color-change rule on a few small graphs: which
vertices a starting set can force, in what order, and when the process
stalls.
"""

# The rule: a black vertex with exactly one white neighbor turns that
# neighbor black. Repeating until nothing changes yields the derived
# set of the starting vertices.
from zfbackbone import Graph, apply_zero_forcing, greedy_zfs, is_zfs, zeta

# Start with a path on five vertices, colored black at one end.
path = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
derived, record = apply_zero_forcing(path, (0,))

# The single leader walks the whole path: each newly forced vertex has
# exactly one white neighbor left, so the chain never stalls.
print("path derived set:", sorted(derived))
print("path forces     :", record.forces)

# The record also groups the forces into chains, one per leader. Here
# there is a single chain covering every vertex.
print("path chains     :", record.chains)

# A cycle behaves differently. Every black vertex on C_5 has two white
# neighbors, so one leader forces nothing at all.
cycle = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
derived, record = apply_zero_forcing(cycle, (0,))
print("cycle derived set from {0}:", sorted(derived))

# Two adjacent leaders break the tie: each end of the black arc sees
# just one white vertex, and the coloring spreads around the ring.
derived, record = apply_zero_forcing(cycle, (0, 1))
print("cycle derived set from {0, 1}:", sorted(derived))
print("cycle is ZFS with {0, 1}?", is_zfs(cycle, (0, 1)))

# zeta counts the derived set; it is the quantity the backbone
# construction preserves on sparsified graphs.
print("zeta of the cycle with one leader :", zeta(cycle, (0,)))
print("zeta of the cycle with two leaders:", zeta(cycle, (0, 1)))

# greedy_zfs builds a zero forcing set from scratch by probing
# candidate leaders in ascending id order and keeping the ones that
# are still needed.
star = Graph(6, [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)])
leaders = greedy_zfs(star)

# A star needs all but one leaf: the center can only force its last
# white neighbor once every other leaf is already black.
print("greedy leaders on the star:", leaders)
