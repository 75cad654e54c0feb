"""Graph builders and dataset fixtures shared across the test modules."""

from __future__ import annotations

import os

import numpy as np

from zfbackbone import DatasetBundle, Graph, connected_components


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def star_graph(leaves: int) -> Graph:
    """Center 0 with the given number of leaves."""
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def grid_graph(rows: int, cols: int) -> Graph:
    def vid(r: int, c: int) -> int:
        return r * cols + c

    edges = []
    for r in range(rows):
        for c in range(cols):
            if c + 1 < cols:
                edges.append((vid(r, c), vid(r, c + 1)))
            if r + 1 < rows:
                edges.append((vid(r, c), vid(r + 1, c)))
    return Graph(rows * cols, edges)


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return Graph(10, outer + inner + spokes)


def random_graph(rng: np.random.Generator, n: int, p: float) -> Graph:
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return Graph(n, edges)


def random_connected_graph(rng: np.random.Generator, n: int, p: float) -> Graph:
    """Erdos-Renyi draw patched into one component with bridge edges."""
    g = random_graph(rng, n, p)
    comps = connected_components(g)
    if comps.count <= 1:
        return g
    members: dict[int, list[int]] = {}
    for v in range(n):
        members.setdefault(int(comps.labels[v]), []).append(v)
    groups = [members[label] for label in sorted(members)]
    extra = [
        (int(rng.choice(a)), int(rng.choice(b)))
        for a, b in zip(groups, groups[1:])
    ]
    return Graph(n, list(g.edges) + extra)


def synthetic_bundle(
    seed: int,
    count: int,
    n_range: tuple[int, int] = (4, 16),
    p_range: tuple[float, float] = (0.2, 0.7),
    connected: bool = True,
    node_labels: bool = False,
    name: str = "SYN",
) -> DatasetBundle:
    rng = np.random.default_rng(seed)
    graphs = []
    labels = []
    rows = []
    for _ in range(count):
        n = int(rng.integers(n_range[0], n_range[1] + 1))
        p = float(rng.uniform(*p_range))
        g = random_connected_graph(rng, n, p) if connected else random_graph(rng, n, p)
        graphs.append(g)
        labels.append(int(rng.integers(0, 2)))
        rows.append(tuple(int(x) for x in rng.integers(0, 3, size=n)))
    remap = {value: i for i, value in enumerate(sorted(set(labels)))}
    labels = [remap[value] for value in labels]
    return DatasetBundle(
        name=name,
        graphs=tuple(graphs),
        labels=tuple(labels),
        node_labels=tuple(rows) if node_labels else None,
    )


def dataset_dir() -> str | None:
    """Directory holding real benchmark datasets, when present.

    Checked in order: the ZFBACKBONE_DATA environment variable, then
    tests/data. Each dataset lives in its own subdirectory named after
    it (e.g. data/MUTAG/MUTAG_A.txt).
    """
    candidates = []
    env = os.environ.get("ZFBACKBONE_DATA")
    if env:
        candidates.append(env)
    candidates.append(os.path.join(os.path.dirname(__file__), "data"))
    for root in candidates:
        if os.path.isdir(root):
            return root
    return None


def dataset_available(root: str | None, name: str) -> bool:
    if root is None:
        return False
    return os.path.exists(os.path.join(root, name, name + "_A.txt"))
