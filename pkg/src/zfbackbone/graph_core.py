"""Undirected simple graphs and structural primitives.

Vertices are dense integers in ``[0, n)``. Adjacency is stored both as a
canonical edge tuple and as per-vertex sorted neighbor tuples, so every
traversal in the library visits vertices in ascending order and results
are reproducible run to run.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

import numpy as np

#: Sentinel distance for vertices with no path to the source.
UNREACHABLE = -1

EdgePair = tuple[int, int]


def canonical_edge(u: int, v: int) -> EdgePair:
    """Return the edge as an ordered pair (min, max)."""
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``.

    Self-loops, duplicate edges (after canonicalization) and endpoints
    outside ``[0, n)`` are rejected. Neighbor lists are sorted ascending.
    """

    __slots__ = ("n", "edges", "_edge_set", "_adj")

    def __init__(self, n: int, edges: Iterable[EdgePair] = ()):
        n = int(n)
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        canon = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) outside vertex range [0, {n})")
            canon.add(canonical_edge(u, v))
        self.n = n
        self.edges: tuple[EdgePair, ...] = tuple(sorted(canon))
        self._edge_set = frozenset(self.edges)
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        self._adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(a)) for a in adj)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        """Per-vertex neighbor tuples, each sorted ascending."""
        return self._adj

    def neighbors(self, u: int) -> tuple[int, ...]:
        """Neighbors of ``u`` in ascending order."""
        self._check_vertex(u)
        return self._adj[u]

    def degree(self, u: int) -> int:
        self._check_vertex(u)
        return len(self._adj[u])

    def has_edge(self, u: int, v: int) -> bool:
        return canonical_edge(u, v) in self._edge_set

    @property
    def edge_set(self) -> frozenset[EdgePair]:
        return self._edge_set

    def _check_vertex(self, u: int) -> None:
        if not (0 <= u < self.n):
            raise ValueError(f"vertex {u} outside range [0, {self.n})")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges})"


@dataclass(frozen=True, eq=False)
class DistanceMap:
    """Hop distances from a single source; UNREACHABLE marks no path."""

    source: int
    dist: np.ndarray  # int64, shape (n,)


@dataclass(frozen=True, eq=False)
class ComponentLabeling:
    """Connected component id per vertex; ids are 0..count-1."""

    labels: np.ndarray  # int64, shape (n,)
    count: int


def average_degree(g: Graph) -> float:
    """Mean vertex degree, 2|E|/n."""
    if g.n < 1:
        raise ValueError("average degree undefined for the empty graph")
    return 2.0 * g.num_edges / g.n


def density(g: Graph) -> float:
    """Fraction of vertex pairs joined by an edge, 2|E|/(n(n-1))."""
    if g.n < 2:
        raise ValueError("density requires at least two vertices")
    return 2.0 * g.num_edges / (g.n * (g.n - 1))


def bfs_distances(g: Graph, source: int) -> DistanceMap:
    """Exact hop distances from ``source`` by breadth-first search."""
    g._check_vertex(source)
    dist = np.full(g.n, UNREACHABLE, dtype=np.int64)
    dist[source] = 0
    queue = deque([source])
    adj = g.adjacency
    while queue:
        u = queue.popleft()
        du = dist[u]
        for w in adj[u]:
            if dist[w] == UNREACHABLE:
                dist[w] = du + 1
                queue.append(w)
    return DistanceMap(source=source, dist=dist)


def connected_components(g: Graph) -> ComponentLabeling:
    """Label vertices by connected component, ids assigned in ascending
    order of each component's smallest vertex."""
    labels = np.full(g.n, -1, dtype=np.int64)
    adj = g.adjacency
    count = 0
    for start in range(g.n):
        if labels[start] != -1:
            continue
        labels[start] = count
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if labels[w] == -1:
                    labels[w] = count
                    queue.append(w)
        count += 1
    return ComponentLabeling(labels=labels, count=count)


class _UnionFind:
    """Array-based union-find with path halving and union by size."""

    __slots__ = ("parent", "size")

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, x: int, y: int) -> bool:
        """Merge the sets of x and y; False if already joined."""
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        if self.size[rx] < self.size[ry]:
            rx, ry = ry, rx
        self.parent[ry] = rx
        self.size[rx] += self.size[ry]
        return True


def is_spanning_forest(g: Graph, edge_subset: Iterable[EdgePair]) -> bool:
    """True iff ``edge_subset`` is acyclic and spans each connected
    component of ``g`` with a single tree."""
    subset = set()
    for u, v in edge_subset:
        e = canonical_edge(int(u), int(v))
        if e not in g.edge_set:
            raise ValueError(f"edge {e} not present in the host graph")
        subset.add(e)
    uf = _UnionFind(g.n)
    for u, v in subset:
        if not uf.union(u, v):
            return False  # cycle
    # Acyclic with edges inside g's components: partition matches iff the
    # edge count equals n minus the number of host components.
    return len(subset) == g.n - connected_components(g).count


def _laplacian_minor(g: Graph, drop: int) -> list[list[int]]:
    """Integer Laplacian of g with row/column ``drop`` removed."""
    keep = [v for v in range(g.n) if v != drop]
    index = {v: i for i, v in enumerate(keep)}
    k = len(keep)
    rows = [[0] * k for _ in range(k)]
    for v in keep:
        rows[index[v]][index[v]] = g.degree(v)
    for u, v in g.edges:
        if u != drop and v != drop:
            rows[index[u]][index[v]] -= 1
            rows[index[v]][index[u]] -= 1
    return rows


def _det_bareiss(rows: list[list[int]]) -> int:
    """Exact determinant of an integer matrix (fraction-free elimination)."""
    a = [row[:] for row in rows]
    k = len(a)
    if k == 0:
        return 1
    sign = 1
    prev = 1
    for col in range(k - 1):
        if a[col][col] == 0:
            for r in range(col + 1, k):
                if a[r][col] != 0:
                    a[col], a[r] = a[r], a[col]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[col][col]
        for i in range(col + 1, k):
            for j in range(col + 1, k):
                a[i][j] = (a[i][j] * pivot - a[i][col] * a[col][j]) // prev
            a[i][col] = 0
        prev = pivot
    return sign * a[-1][-1]


def _det_fraction_gauss(rows: list[list[int]]) -> int:
    """Exact determinant via Fraction-based elimination with partial
    pivoting. Independent re-derivation used to cross-check counts."""
    a = [[Fraction(x) for x in row] for row in rows]
    k = len(a)
    if k == 0:
        return 1
    det = Fraction(1)
    for col in range(k):
        pivot_row = max(range(col, k), key=lambda r: abs(a[r][col]))
        if a[pivot_row][col] == 0:
            return 0
        if pivot_row != col:
            a[col], a[pivot_row] = a[pivot_row], a[col]
            det = -det
        pivot = a[col][col]
        det *= pivot
        for r in range(col + 1, k):
            factor = a[r][col] / pivot
            if factor:
                arow, crow = a[r], a[col]
                for j in range(col, k):
                    arow[j] -= factor * crow[j]
    assert det.denominator == 1
    return int(det)


def spanning_tree_count(g: Graph) -> int:
    """Exact number of spanning trees (Kirchhoff cofactor, big-integer
    arithmetic). Returns 0 for disconnected graphs by convention."""
    if g.n == 0:
        return 1
    if connected_components(g).count != 1:
        return 0
    return _det_bareiss(_laplacian_minor(g, 0))


def spanning_tree_count_crosscheck(g: Graph) -> int:
    """Spanning-tree count recomputed through an independent determinant
    routine (Fraction pivoting instead of fraction-free elimination)."""
    if g.n == 0:
        return 1
    if connected_components(g).count != 1:
        return 0
    return _det_fraction_gauss(_laplacian_minor(g, 0))


def spanning_tree_upper_bound(g: Graph) -> float:
    """Closed-form bound ((2m - max_deg - min_deg - 1)/(n-3))^(n-3).

    Only defined for n > 3. The bound is cited from external work with
    unstated hypotheses; it is informative, not guaranteed to dominate
    the exact count on every small graph.
    """
    if g.n <= 3:
        raise ValueError("spanning-tree upper bound requires n > 3")
    degrees = [g.degree(v) for v in range(g.n)]
    dmax, dmin = max(degrees), min(degrees)
    base = (2 * g.num_edges - dmax - dmin - 1) / (g.n - 3)
    return float(base ** (g.n - 3))
