"""Reader for the multi-file graph-classification dataset layout.

Parses the same on-disk format the sparsifier CLI reads and writes:
``<NAME>_A.txt`` (global 1-indexed edge list, both directions),
``<NAME>_graph_indicator.txt``, ``<NAME>_graph_labels.txt``, optional
``<NAME>_node_labels.txt``, and the optional ``<NAME>_leaders.txt`` log
emitted next to sparsified datasets. Deliberately self-contained so the
harness only depends on the files, not on the sparsifier package.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Optional

import numpy as np

DEGREE_CAP = 20  # degrees above this share the top one-hot bucket


@dataclass(frozen=True)
class GraphRecord:
    """One graph: vertex count, undirected edge array, optional labels."""

    num_nodes: int
    edges: np.ndarray  # (E, 2) int64, u < v, deduplicated
    node_labels: Optional[np.ndarray] = None  # (num_nodes,) int64


@dataclass(frozen=True)
class LoadedDataset:
    name: str
    records: tuple[GraphRecord, ...]
    labels: np.ndarray  # (G,) int64, normalized to 0..num_classes-1
    num_classes: int

    def __len__(self) -> int:
        return len(self.records)


def _int_column(path: str) -> list[int]:
    values = []
    with open(path, "r", encoding="ascii") as fh:
        for lineno, raw in enumerate(fh, start=1):
            text = raw.strip()
            if not text:
                continue
            try:
                values.append(int(text))
            except ValueError:
                raise ValueError(f"{path}:{lineno}: expected an integer, got {text!r}")
    return values


def load_dataset(directory: str, name: str) -> LoadedDataset:
    """Load one dataset directory into per-graph records.

    Node ids are remapped to 0..n-1 within each graph, duplicate edge
    listings and self-loops are dropped, and raw class labels (for
    example -1/1) are renumbered to 0..k-1 in sorted order.
    """
    prefix = os.path.join(directory, name)
    indicator = _int_column(prefix + "_graph_indicator.txt")
    raw_labels = _int_column(prefix + "_graph_labels.txt")
    graph_count = len(raw_labels)
    if not indicator:
        raise ValueError(f"{prefix}_graph_indicator.txt is empty")
    if max(indicator) > graph_count or min(indicator) < 1:
        raise ValueError(f"{name}: graph indicator references a missing graph")

    sizes = [0] * graph_count
    local_id = []
    graph_of_node = []
    for gid in indicator:
        graph_of_node.append(gid - 1)
        local_id.append(sizes[gid - 1])
        sizes[gid - 1] += 1
    if min(sizes) < 1:
        raise ValueError(f"{name}: every graph needs at least one node")

    edge_sets: list[set[tuple[int, int]]] = [set() for _ in range(graph_count)]
    edges_path = prefix + "_A.txt"
    with open(edges_path, "r", encoding="ascii") as fh:
        for lineno, raw in enumerate(fh, start=1):
            text = raw.strip()
            if not text:
                continue
            parts = text.split(",")
            if len(parts) != 2:
                raise ValueError(f"{edges_path}:{lineno}: expected 'u, v', got {text!r}")
            u, v = int(parts[0]), int(parts[1])
            if not (1 <= u <= len(indicator) and 1 <= v <= len(indicator)):
                raise ValueError(f"{edges_path}:{lineno}: node id out of range")
            gu, gv = graph_of_node[u - 1], graph_of_node[v - 1]
            if gu != gv:
                raise ValueError(f"{edges_path}:{lineno}: edge crosses graphs")
            if u == v:
                continue
            a, b = local_id[u - 1], local_id[v - 1]
            edge_sets[gu].add((min(a, b), max(a, b)))

    node_label_rows: Optional[list[np.ndarray]] = None
    labels_path = prefix + "_node_labels.txt"
    if os.path.exists(labels_path):
        flat = _int_column(labels_path)
        if len(flat) != len(indicator):
            raise ValueError(f"{labels_path}: one label per node required")
        node_label_rows = [np.zeros(s, dtype=np.int64) for s in sizes]
        for value, gid, local in zip(flat, graph_of_node, local_id):
            node_label_rows[gid][local] = value

    records = []
    for gi in range(graph_count):
        pairs = sorted(edge_sets[gi])
        arr = np.array(pairs, dtype=np.int64).reshape(len(pairs), 2)
        records.append(
            GraphRecord(
                num_nodes=sizes[gi],
                edges=arr,
                node_labels=None if node_label_rows is None else node_label_rows[gi],
            )
        )

    distinct = sorted(set(raw_labels))
    remap = {value: i for i, value in enumerate(distinct)}
    labels = np.array([remap[value] for value in raw_labels], dtype=np.int64)
    return LoadedDataset(
        name=name,
        records=tuple(records),
        labels=labels,
        num_classes=len(distinct),
    )


def read_leader_log(directory: str, name: str) -> Optional[tuple[tuple[int, ...], ...]]:
    """Per-graph leader ids from ``<NAME>_leaders.txt``, None if absent."""
    path = os.path.join(directory, name + "_leaders.txt")
    if not os.path.exists(path):
        return None
    rows = []
    with open(path, "r", encoding="ascii") as fh:
        for raw in fh:
            text = raw.strip()
            rows.append(tuple(int(part) for part in text.split()) if text else ())
    return tuple(rows)


def degrees(record: GraphRecord) -> np.ndarray:
    out = np.zeros(record.num_nodes, dtype=np.int64)
    for u, v in record.edges:
        out[u] += 1
        out[v] += 1
    return out


def build_features(dataset: LoadedDataset) -> tuple[list[np.ndarray], str]:
    """Per-graph float32 node feature matrices plus the mode used.

    One-hot node labels over the dataset-wide vocabulary when the files
    carried labels; otherwise a one-hot of the degree capped at
    DEGREE_CAP. Both are deterministic functions of the input files.
    """
    if all(r.node_labels is not None for r in dataset.records):
        vocab = sorted({int(x) for r in dataset.records for x in r.node_labels})
        index = {value: i for i, value in enumerate(vocab)}
        dim = len(vocab)
        feats = []
        for r in dataset.records:
            mat = np.zeros((r.num_nodes, dim), dtype=np.float32)
            for node, value in enumerate(r.node_labels):
                mat[node, index[int(value)]] = 1.0
            feats.append(mat)
        return feats, "node-labels"

    dim = DEGREE_CAP + 1
    feats = []
    for r in dataset.records:
        mat = np.zeros((r.num_nodes, dim), dtype=np.float32)
        for node, d in enumerate(degrees(r)):
            mat[node, min(int(d), DEGREE_CAP)] = 1.0
        feats.append(mat)
    return feats, "degree-buckets"
