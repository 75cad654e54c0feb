"""Zero-forcing dynamics: color-change rule, derived sets, forcing chains.

A vertex set starts black, the rest white. Whenever a black vertex has
exactly one white neighbor it forces that neighbor black. The fixpoint
of this rule is the derived set; an initial set whose derived set is
the whole vertex set is a zero-forcing set (ZFS).
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .graph_core import EdgePair, Graph, canonical_edge

LeaderSet = tuple[int, ...]


class GraphTooLargeError(ValueError):
    """Raised when an exact exponential search is asked to run on a
    graph beyond its size cap."""


@dataclass(frozen=True)
class ForcingRecord:
    """Ordered log of forces plus the induced forcing chains.

    ``forces`` lists (forcer, forced) events in the order applied.
    ``chains`` holds one vertex path per leader, in leader order; a
    leader that never forces contributes the single-vertex path.
    """

    forces: tuple[tuple[int, int], ...]
    chains: tuple[tuple[int, ...], ...]

    @property
    def force_edges(self) -> frozenset[EdgePair]:
        """Canonical undirected edges traversed by forces."""
        return frozenset(canonical_edge(u, v) for u, v in self.forces)


def check_leaders(g: Graph, init: Iterable[int]) -> LeaderSet:
    """Validate and normalize a leader set, preserving order."""
    leaders = tuple(int(v) for v in init)
    seen = set()
    for v in leaders:
        if not (0 <= v < g.n):
            raise ValueError(f"leader {v} outside vertex range [0, {g.n})")
        if v in seen:
            raise ValueError(f"duplicate leader {v}")
        seen.add(v)
    return leaders


def apply_zero_forcing(g: Graph, init: Iterable[int]) -> tuple[frozenset[int], ForcingRecord]:
    """Run the zero-forcing process from ``init`` to its fixpoint.

    Returns the derived set and a record of the forces applied. Among
    simultaneously eligible vertices the smallest id forces first, so
    the record is reproducible for a fixed graph and initial set. The
    derived set itself does not depend on the order.
    """
    leaders = check_leaders(g, init)
    n = g.n
    adj = g.adjacency
    black = bytearray(n)
    # white_count[u] = number of white neighbors of u, maintained for all.
    white_count = [len(adj[u]) for u in range(n)]
    for v in leaders:
        black[v] = 1
        for w in adj[v]:
            white_count[w] -= 1
    queue = deque(v for v in range(n) if black[v] and white_count[v] == 1)

    forces: list[tuple[int, int]] = []
    while queue:
        u = queue.popleft()
        if white_count[u] != 1:
            continue  # stale entry: the white neighbor was forced elsewhere
        v = next(w for w in adj[u] if not black[w])
        forces.append((u, v))
        black[v] = 1
        newly = []
        for w in adj[v]:
            white_count[w] -= 1
            if black[w] and white_count[w] == 1:
                newly.append(w)
        if white_count[v] == 1:
            newly.append(v)
        queue.extend(sorted(newly))

    derived = frozenset(v for v in range(n) if black[v])

    chains = [[v] for v in leaders]
    tail_to_chain = {v: c for v, c in zip(leaders, chains)}
    for u, v in forces:
        chain = tail_to_chain.pop(u)
        chain.append(v)
        tail_to_chain[v] = chain
    record = ForcingRecord(
        forces=tuple(forces),
        chains=tuple(tuple(c) for c in chains),
    )
    return derived, record


def zeta(g: Graph, init: Iterable[int]) -> int:
    """Size of the derived set from ``init``."""
    derived, _ = apply_zero_forcing(g, init)
    return len(derived)


def is_zfs(g: Graph, init: Iterable[int]) -> bool:
    """True iff the derived set from ``init`` covers every vertex."""
    derived, _ = apply_zero_forcing(g, init)
    return len(derived) == g.n


def greedy_zfs(g: Graph) -> LeaderSet:
    """Greedy zero-forcing set: repeatedly add the vertex that maximizes
    the derived set, smallest id on ties.

    Always returns a valid ZFS (on disconnected graphs every component
    receives at least one leader, since no force crosses components).
    The size is heuristic, not guaranteed minimum.
    """
    n = g.n
    adj = g.adjacency
    black = bytearray(n)
    white_count = [len(adj[u]) for u in range(n)]

    def close_from(v: int, trail: list[int]) -> None:
        # Blacken v, then run forcing to fixpoint recording every vertex
        # blackened. Order within the fixpoint does not affect the result.
        def blacken(x: int) -> None:
            black[x] = 1
            trail.append(x)
            for w in adj[x]:
                white_count[w] -= 1

        blacken(v)
        frontier = [v]
        frontier.extend(w for w in adj[v] if black[w])
        while frontier:
            u = frontier.pop()
            if not black[u] or white_count[u] != 1:
                continue
            y = next(w for w in adj[u] if not black[w])
            blacken(y)
            frontier.append(y)
            frontier.extend(w for w in adj[y] if black[w])

    def rollback(trail: list[int]) -> None:
        for x in reversed(trail):
            black[x] = 0
            for w in adj[x]:
                white_count[w] += 1

    chosen: list[int] = []
    covered = 0
    while covered < n:
        best_v = -1
        best_gain = 0
        for v in range(n):
            if black[v]:
                continue
            trail: list[int] = []
            close_from(v, trail)
            gain = len(trail)
            rollback(trail)
            if gain > best_gain:
                best_gain, best_v = gain, v
        trail = []
        close_from(best_v, trail)
        covered += len(trail)
        chosen.append(best_v)
    return tuple(chosen)


def minimum_zfs_bruteforce(g: Graph, max_n: int = 20) -> LeaderSet:
    """Minimum-cardinality ZFS by exhaustive subset search.

    Subsets are tried in increasing size, lexicographic within a size,
    so the result is deterministic. Exponential; refuses graphs with
    more than ``max_n`` vertices.
    """
    if g.n > max_n:
        raise GraphTooLargeError(
            f"exact ZFS search capped at {max_n} vertices, graph has {g.n}"
        )
    for k in range(g.n + 1):
        for subset in itertools.combinations(range(g.n), k):
            if is_zfs(g, subset):
                return subset
    raise AssertionError("unreachable: the full vertex set is always a ZFS")
