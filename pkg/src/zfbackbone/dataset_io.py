"""Dataset ingestion, emission, sparsification, and statistics.

Reads and writes graph-classification datasets in the standard
multi-file benchmark layout (`<name>_A.txt`, `<name>_graph_indicator.txt`,
`<name>_graph_labels.txt`, optional `<name>_node_labels.txt`), applies a
backbone method to every graph, and computes the summary statistics
used to compare an original dataset against its sparsified counterpart.

All files are ASCII with LF line endings. Edge files are 1-indexed and
list both directions of every undirected edge; the leaders log is
0-indexed with one space-separated line per graph.
"""

from __future__ import annotations

import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .backbone import (
    METHOD_DISTANCE,
    METHOD_RANDOM_TREE,
    METHOD_ZFS,
    distance_backbone,
    random_spanning_tree,
    zfs_backbone,
)
from .controllability import derived_seed
from .graph_core import Graph, average_degree, density
from .zero_forcing import LeaderSet, greedy_zfs

logger = logging.getLogger(__name__)

SUFFIX_EDGES = "_A.txt"
SUFFIX_INDICATOR = "_graph_indicator.txt"
SUFFIX_GRAPH_LABELS = "_graph_labels.txt"
SUFFIX_NODE_LABELS = "_node_labels.txt"
SUFFIX_LEADERS = "_leaders.txt"


class DatasetFormatError(ValueError):
    """A dataset file violates the expected layout."""

    def __init__(self, path: str, line: Optional[int], message: str):
        where = f"{path}:{line}" if line is not None else path
        super().__init__(f"{where}: {message}")
        self.path = path
        self.line = line


@dataclass(frozen=True, eq=False)
class DatasetBundle:
    """A named collection of graphs with per-graph class labels.

    Class labels are contiguous integers starting at 0. Node labels,
    when present, carry one integer per vertex of every graph.
    """

    name: str
    graphs: tuple[Graph, ...]
    labels: tuple[int, ...]
    node_labels: Optional[tuple[tuple[int, ...], ...]] = None

    def __post_init__(self):
        if not self.name or os.sep in self.name:
            raise ValueError("dataset name must be a plain non-empty string")
        if len(self.labels) != len(self.graphs):
            raise ValueError("one class label required per graph")
        classes = set(self.labels)
        if classes and classes != set(range(max(classes) + 1)):
            # contiguity makes read(write(b)) == b: the reader renumbers
            # sorted distinct labels, which is identity exactly here
            raise ValueError("class labels must be contiguous integers from 0")
        for i, g in enumerate(self.graphs):
            if g.n < 1:
                raise ValueError(f"graph {i} has no vertices")
        if self.node_labels is not None:
            if len(self.node_labels) != len(self.graphs):
                raise ValueError("one node label row required per graph")
            for i, (g, row) in enumerate(zip(self.graphs, self.node_labels)):
                if len(row) != g.n:
                    raise ValueError(f"graph {i}: node label count != n")

    def __len__(self) -> int:
        return len(self.graphs)


@dataclass(frozen=True)
class StatsReport:
    """Dataset summary: node extremes plus per-column degree/density.

    Average degree is the unweighted mean of per-graph average degrees.
    Density extremes skip graphs with fewer than two vertices, where
    density is undefined. Backbone fields are None when no sparsified
    bundle was supplied.
    """

    graph_count: int
    node_min: int
    node_max: int
    avg_degree_original: float
    density_min_original: float
    density_max_original: float
    avg_degree_backbone: Optional[float] = None
    density_min_backbone: Optional[float] = None
    density_max_backbone: Optional[float] = None

    def to_dict(self) -> dict:
        return {
            "graph_count": self.graph_count,
            "node_min": self.node_min,
            "node_max": self.node_max,
            "avg_degree_original": self.avg_degree_original,
            "density_min_original": self.density_min_original,
            "density_max_original": self.density_max_original,
            "avg_degree_backbone": self.avg_degree_backbone,
            "density_min_backbone": self.density_min_backbone,
            "density_max_backbone": self.density_max_backbone,
        }


def _read_int_lines(path: str) -> list[tuple[int, int]]:
    """Non-blank lines of a one-integer-per-line file as (lineno, value)."""
    out = []
    with open(path, "r", encoding="ascii") as fh:
        for lineno, raw in enumerate(fh, start=1):
            text = raw.strip()
            if not text:
                continue
            try:
                out.append((lineno, int(text)))
            except ValueError:
                raise DatasetFormatError(path, lineno, f"expected an integer, got {text!r}")
    return out


def _read_edge_lines(path: str) -> list[tuple[int, int, int]]:
    """Non-blank lines of the edge file as (lineno, row, col), 1-indexed."""
    out = []
    with open(path, "r", encoding="ascii") as fh:
        for lineno, raw in enumerate(fh, start=1):
            text = raw.strip()
            if not text:
                continue
            parts = text.split(",")
            if len(parts) != 2:
                raise DatasetFormatError(path, lineno, f"expected 'u, v', got {text!r}")
            try:
                out.append((lineno, int(parts[0]), int(parts[1])))
            except ValueError:
                raise DatasetFormatError(path, lineno, f"expected integers, got {text!r}")
    return out


def read_dataset(directory: str, name: str) -> DatasetBundle:
    """Load a dataset from the multi-file benchmark layout.

    Vertices are remapped per graph to [0, n_i). Each undirected edge is
    stored once even if the file lists both directions; duplicates and
    self-loops are dropped with a logged count. Class labels are
    normalized to contiguous integers starting at 0.
    """
    ind_path = os.path.join(directory, name + SUFFIX_INDICATOR)
    lab_path = os.path.join(directory, name + SUFFIX_GRAPH_LABELS)
    edge_path = os.path.join(directory, name + SUFFIX_EDGES)

    indicator = _read_int_lines(ind_path)
    raw_labels = _read_int_lines(lab_path)
    graph_count = len(raw_labels)

    # Node ids are the 1-indexed positions among non-blank indicator lines.
    graph_of_node: list[int] = []
    local_id: list[int] = []
    sizes = [0] * graph_count
    for lineno, gid in indicator:
        if not (1 <= gid <= graph_count):
            raise DatasetFormatError(
                ind_path, lineno, f"graph id {gid} outside 1..{graph_count}"
            )
        graph_of_node.append(gid - 1)
        local_id.append(sizes[gid - 1])
        sizes[gid - 1] += 1
    for gi, size in enumerate(sizes):
        if size == 0:
            raise DatasetFormatError(
                lab_path, gi + 1, f"graph {gi + 1} has a label but no vertices"
            )

    total_nodes = len(graph_of_node)
    edges_per_graph: list[dict[tuple[int, int], int]] = [
        {} for _ in range(graph_count)
    ]
    dropped_loops = 0
    for lineno, a, b in _read_edge_lines(edge_path):
        for node in (a, b):
            if not (1 <= node <= total_nodes):
                raise DatasetFormatError(
                    edge_path, lineno, f"node id {node} outside 1..{total_nodes}"
                )
        ga, gb = graph_of_node[a - 1], graph_of_node[b - 1]
        if ga != gb:
            raise DatasetFormatError(
                edge_path, lineno, f"edge joins graphs {ga + 1} and {gb + 1}"
            )
        if a == b:
            dropped_loops += 1
            continue
        u, v = local_id[a - 1], local_id[b - 1]
        key = (u, v) if u < v else (v, u)
        counts = edges_per_graph[ga]
        counts[key] = counts.get(key, 0) + 1

    # Two listings per edge (both directions) are the expected layout;
    # anything past that is a genuine duplicate.
    duplicates = sum(
        count - 2
        for counts in edges_per_graph
        for count in counts.values()
        if count > 2
    )
    if dropped_loops or duplicates:
        logger.warning(
            "%s: dropped %d self-loop lines and %d duplicate edge lines",
            name,
            dropped_loops,
            duplicates,
        )

    node_labels = None
    nl_path = os.path.join(directory, name + SUFFIX_NODE_LABELS)
    if os.path.exists(nl_path):
        raw_node_labels = _read_int_lines(nl_path)
        if len(raw_node_labels) != total_nodes:
            raise DatasetFormatError(
                nl_path,
                None,
                f"{len(raw_node_labels)} node labels for {total_nodes} vertices",
            )
        rows: list[list[int]] = [[] for _ in range(graph_count)]
        for (_, value), gid in zip(raw_node_labels, graph_of_node):
            rows[gid].append(value)
        node_labels = tuple(tuple(row) for row in rows)

    label_map = {value: i for i, value in enumerate(sorted({v for _, v in raw_labels}))}
    labels = tuple(label_map[v] for _, v in raw_labels)
    graphs = tuple(
        Graph(sizes[gi], sorted(edges_per_graph[gi].keys()))
        for gi in range(graph_count)
    )
    return DatasetBundle(name=name, graphs=graphs, labels=labels, node_labels=node_labels)


def write_dataset(bundle: DatasetBundle, directory: str) -> None:
    """Emit the multi-file layout; inverse of read_dataset.

    Node ids are global and 1-indexed, graphs occupy consecutive id
    ranges in bundle order, and every undirected edge is listed in both
    directions in ascending order.
    """
    os.makedirs(directory, exist_ok=True)
    offsets = []
    total = 0
    for g in bundle.graphs:
        offsets.append(total)
        total += g.n

    def target(suffix: str) -> str:
        return os.path.join(directory, bundle.name + suffix)

    with open(target(SUFFIX_EDGES), "w", encoding="ascii", newline="\n") as fh:
        for g, off in zip(bundle.graphs, offsets):
            pairs = []
            for u, v in g.edges:
                pairs.append((u + off + 1, v + off + 1))
                pairs.append((v + off + 1, u + off + 1))
            for a, b in sorted(pairs):
                fh.write(f"{a}, {b}\n")
    with open(target(SUFFIX_INDICATOR), "w", encoding="ascii", newline="\n") as fh:
        for gi, g in enumerate(bundle.graphs):
            for _ in range(g.n):
                fh.write(f"{gi + 1}\n")
    with open(target(SUFFIX_GRAPH_LABELS), "w", encoding="ascii", newline="\n") as fh:
        for label in bundle.labels:
            fh.write(f"{label}\n")
    if bundle.node_labels is not None:
        with open(target(SUFFIX_NODE_LABELS), "w", encoding="ascii", newline="\n") as fh:
            for row in bundle.node_labels:
                for value in row:
                    fh.write(f"{value}\n")


def read_leaders(directory: str, name: str) -> tuple[LeaderSet, ...]:
    """Per-graph leader sets from the leaders log (0-indexed ids)."""
    path = os.path.join(directory, name + SUFFIX_LEADERS)
    rows = []
    with open(path, "r", encoding="ascii") as fh:
        for lineno, raw in enumerate(fh, start=1):
            text = raw.strip()
            try:
                rows.append(tuple(int(part) for part in text.split()) if text else ())
            except ValueError:
                raise DatasetFormatError(path, lineno, f"expected integers, got {text!r}")
    return tuple(rows)


def write_leaders(directory: str, name: str, leaders: Sequence[LeaderSet]) -> None:
    """One space-separated 0-indexed line per graph; empty line = no leaders."""
    os.makedirs(directory, exist_ok=True)
    path = os.path.join(directory, name + SUFFIX_LEADERS)
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        for row in leaders:
            fh.write(" ".join(str(v) for v in row) + "\n")


def _sparsify_one(args: tuple[Graph, str, int, bool]) -> tuple[tuple[tuple[int, int], ...], LeaderSet]:
    g, method, child_seed, as_tree = args
    if method == METHOD_ZFS:
        b = zfs_backbone(g)
    elif method == METHOD_DISTANCE:
        b = distance_backbone(g, greedy_zfs(g), as_tree=as_tree)
    elif method == METHOD_RANDOM_TREE:
        b = random_spanning_tree(g, seed=child_seed)
    else:
        raise ValueError(f"unknown backbone method {method!r}")
    return b.kept_edges, b.leaders


def sparsify_dataset(
    bundle: DatasetBundle,
    method: str,
    seed: int = 0,
    as_tree: bool = False,
    jobs: int = 1,
) -> tuple[DatasetBundle, tuple[LeaderSet, ...]]:
    """Apply one backbone method to every graph in the bundle.

    Class and node labels pass through untouched. Each graph gets its
    own seed derived from (seed, graph index), so results do not depend
    on the worker count. Returns the sparsified bundle and the
    per-graph leader log.
    """
    if jobs < 1:
        raise ValueError("jobs must be at least 1")
    tasks = [
        (g, method, derived_seed(seed, i), as_tree)
        for i, g in enumerate(bundle.graphs)
    ]
    if jobs == 1 or len(tasks) < 2:
        results = [_sparsify_one(task) for task in tasks]
    else:
        chunk = max(1, len(tasks) // (jobs * 4))
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_sparsify_one, tasks, chunksize=chunk))
    graphs = tuple(
        Graph(g.n, kept) for g, (kept, _) in zip(bundle.graphs, results)
    )
    leaders = tuple(chosen for _, chosen in results)
    sparsified = DatasetBundle(
        name=bundle.name,
        graphs=graphs,
        labels=bundle.labels,
        node_labels=bundle.node_labels,
    )
    return sparsified, leaders


def _column_stats(graphs: Iterable[Graph]) -> tuple[float, float, float]:
    degrees = []
    densities = []
    for g in graphs:
        degrees.append(average_degree(g))
        if g.n >= 2:
            densities.append(density(g))
    if not degrees:
        raise ValueError("empty bundle has no statistics")
    if not densities:
        raise ValueError("density extremes require a graph with n >= 2")
    return (
        sum(degrees) / len(degrees),
        min(densities),
        max(densities),
    )


def compute_stats(
    original: DatasetBundle, backbone: Optional[DatasetBundle] = None
) -> StatsReport:
    """Summary statistics for a dataset, optionally paired with its backbone.

    The two bundles must align graph-for-graph (same count, same node
    counts); sparsification preserves both, so misalignment means the
    inputs do not belong together.
    """
    if backbone is not None:
        if len(backbone) != len(original):
            raise ValueError("bundles disagree on graph count")
        for i, (g, h) in enumerate(zip(original.graphs, backbone.graphs)):
            if g.n != h.n:
                raise ValueError(f"graph {i}: node counts differ ({g.n} vs {h.n})")
    sizes = [g.n for g in original.graphs]
    if not sizes:
        raise ValueError("empty bundle has no statistics")
    avg_o, dmin_o, dmax_o = _column_stats(original.graphs)
    avg_b = dmin_b = dmax_b = None
    if backbone is not None:
        avg_b, dmin_b, dmax_b = _column_stats(backbone.graphs)
    return StatsReport(
        graph_count=len(original),
        node_min=min(sizes),
        node_max=max(sizes),
        avg_degree_original=avg_o,
        density_min_original=dmin_o,
        density_max_original=dmax_o,
        avg_degree_backbone=avg_b,
        density_min_backbone=dmin_b,
        density_max_backbone=dmax_b,
    )
