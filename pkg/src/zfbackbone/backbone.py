"""Learning-backbone construction and verification.

Three sparsifiers over a host graph: the zero-forcing backbone (force
chains completed into a spanning tree), the distance backbone (union of
per-leader BFS trees), and seeded random spanning trees as a baseline.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .graph_core import (
    EdgePair,
    Graph,
    _UnionFind,
    bfs_distances,
    canonical_edge,
)
from .zero_forcing import (
    ForcingRecord,
    LeaderSet,
    apply_zero_forcing,
    check_leaders,
    greedy_zfs,
    zeta,
)

METHOD_ZFS = "zfs"
METHOD_DISTANCE = "distance"
METHOD_RANDOM_TREE = "random_tree"


@dataclass(frozen=True)
class Backbone:
    """A leader set plus a kept-edge subset of a host graph.

    ``record`` is populated for the zfs method (the forcing log the
    construction is built from). ``tree_extracted`` marks a distance
    backbone that was thinned to a spanning forest and therefore no
    longer guarantees leader-distance preservation.
    """

    host: Graph
    leaders: LeaderSet
    kept_edges: frozenset[EdgePair]
    method: str
    record: ForcingRecord | None = None
    tree_extracted: bool = False

    def as_graph(self) -> Graph:
        return Graph(self.host.n, self.kept_edges)


@dataclass(frozen=True)
class MonotonicityReport:
    """Outcome of sampling edge supersets of the force edges."""

    zeta_host: int
    per_trial_zeta: tuple[int, ...]
    exhaustive: bool

    @property
    def per_trial(self) -> tuple[bool, ...]:
        return tuple(z >= self.zeta_host for z in self.per_trial_zeta)

    @property
    def failures(self) -> tuple[int, ...]:
        return tuple(i for i, ok in enumerate(self.per_trial) if not ok)

    @property
    def trials(self) -> int:
        return len(self.per_trial_zeta)

    @property
    def passed(self) -> bool:
        return not self.failures


def _forest_completion(g: Graph, seed_edges: Iterable[EdgePair]) -> set[EdgePair]:
    """Grow ``seed_edges`` into a spanning forest of ``g`` by accepting
    host edges in ascending lexicographic order whenever they merge two
    components."""
    uf = _UnionFind(g.n)
    kept = set()
    for u, v in sorted(seed_edges):
        if uf.union(u, v):
            kept.add((u, v))
    for u, v in g.edges:
        if uf.union(u, v):
            kept.add((u, v))
    return kept


def zfs_backbone(g: Graph) -> Backbone:
    """Zero-forcing learning backbone.

    Leaders come from the greedy ZFS; the kept edges are the force
    edges of the zero-forcing run (the forcing chains) plus connector
    edges chosen deterministically to merge the chains into one tree
    per host component.
    """
    leaders = greedy_zfs(g)
    derived, record = apply_zero_forcing(g, leaders)
    assert len(derived) == g.n, "greedy ZFS must color every vertex"
    kept = _forest_completion(g, record.force_edges)
    assert record.force_edges <= kept
    return Backbone(
        host=g,
        leaders=leaders,
        kept_edges=frozenset(kept),
        method=METHOD_ZFS,
        record=record,
    )


def distance_backbone(g: Graph, leaders: Iterable[int], as_tree: bool = False) -> Backbone:
    """Distance-preserving backbone: union of one BFS shortest-path tree
    per leader.

    Each non-root vertex keeps the edge to its smallest-id neighbor one
    hop closer to the leader, so every leader-to-vertex distance of the
    host (including unreachability) is preserved exactly. With
    ``as_tree`` the union is thinned to a spanning forest that keeps as
    many backbone edges as possible; distances are then no longer
    guaranteed.
    """
    leader_tuple = check_leaders(g, leaders)
    if not leader_tuple:
        raise ValueError("distance backbone requires a nonempty leader set")
    adj = g.adjacency
    kept: set[EdgePair] = set()
    for leader in leader_tuple:
        dist = bfs_distances(g, leader).dist
        for v in range(g.n):
            d = dist[v]
            if d <= 0:
                continue  # root or unreachable
            parent = next(w for w in adj[v] if dist[w] == d - 1)
            kept.add(canonical_edge(parent, v))
    tree_extracted = False
    if as_tree:
        kept = _forest_completion(g, kept)
        tree_extracted = True
    return Backbone(
        host=g,
        leaders=leader_tuple,
        kept_edges=frozenset(kept),
        method=METHOD_DISTANCE,
        tree_extracted=tree_extracted,
    )


def random_spanning_tree(g: Graph, seed: int) -> Backbone:
    """Kruskal-style random spanning forest: process a seeded shuffle of
    the edge list through union-find. Empty leader set."""
    if seed < 0:
        raise ValueError("seed must be non-negative")
    rng = np.random.default_rng(seed)
    order = rng.permutation(len(g.edges))
    uf = _UnionFind(g.n)
    kept = set()
    for idx in order:
        u, v = g.edges[idx]
        if uf.union(u, v):
            kept.add((u, v))
    return Backbone(
        host=g,
        leaders=(),
        kept_edges=frozenset(kept),
        method=METHOD_RANDOM_TREE,
    )


def verify_zfs_backbone_monotonicity(
    g: Graph,
    b: Backbone,
    trials: int = 50,
    seed: int = 0,
    exhaustive: bool = False,
) -> MonotonicityReport:
    """Check that every sampled edge superset of the force edges keeps
    the derived set at least as large as the host's.

    Samples ``trials`` random subsets between the force edges and the
    full edge set; with ``exhaustive`` every superset is enumerated
    (only feasible when few free edges remain).
    """
    if b.method != METHOD_ZFS or b.record is None:
        raise ValueError("monotonicity check requires a zfs backbone")
    if b.host != g:
        raise ValueError("backbone was not built from this host graph")
    force_edges = b.record.force_edges
    free = [e for e in g.edges if e not in force_edges]
    zeta_host = zeta(g, b.leaders)
    base = tuple(force_edges)

    subsets: list[tuple[EdgePair, ...]] = []
    if exhaustive:
        if len(free) > 22:
            raise ValueError(
                f"exhaustive superset check infeasible with {len(free)} free edges"
            )
        for mask in range(1 << len(free)):
            subsets.append(tuple(e for i, e in enumerate(free) if mask >> i & 1))
    else:
        rng = np.random.default_rng(seed)
        for _ in range(trials):
            picks = rng.random(len(free)) < 0.5
            subsets.append(tuple(e for e, take in zip(free, picks) if take))

    per_trial_zeta = tuple(
        zeta(Graph(g.n, base + extra), b.leaders) for extra in subsets
    )
    return MonotonicityReport(
        zeta_host=zeta_host,
        per_trial_zeta=per_trial_zeta,
        exhaustive=exhaustive,
    )
