"""Multi-file dataset layout, sparsification plumbing, and statistics."""

import logging
import os
import tempfile

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import path_graph, random_graph, synthetic_bundle
from zfbackbone import (
    DatasetBundle,
    DatasetFormatError,
    Graph,
    compute_stats,
    connected_components,
    read_dataset,
    read_leaders,
    sparsify_dataset,
    write_dataset,
    write_leaders,
)

TOY = DatasetBundle(
    name="TOY",
    graphs=(Graph(3, [(0, 1), (1, 2)]), Graph(3, [(0, 1), (0, 2), (1, 2)])),
    labels=(0, 1),
    node_labels=((7, 8, 9), (1, 1, 2)),
)


class TestBundleValidation:
    def test_label_count_must_match(self):
        with pytest.raises(ValueError):
            DatasetBundle("X", (path_graph(2),), (0, 1))

    def test_node_label_length_must_match(self):
        with pytest.raises(ValueError):
            DatasetBundle("X", (path_graph(2),), (0,), node_labels=((1,),))

    def test_no_empty_graphs(self):
        with pytest.raises(ValueError):
            DatasetBundle("X", (Graph(0, []),), (0,))

    def test_name_must_be_plain(self):
        with pytest.raises(ValueError):
            DatasetBundle("a/b", (path_graph(2),), (0,))

    def test_labels_must_be_contiguous_from_zero(self):
        with pytest.raises(ValueError):
            DatasetBundle("X", (path_graph(2),), (1,))
        with pytest.raises(ValueError):
            DatasetBundle("X", (path_graph(2), path_graph(2)), (0, 2))
        DatasetBundle("X", (path_graph(2), path_graph(2)), (1, 0))


class TestRoundTrip:
    def test_toy_exact(self, tmp_path):
        write_dataset(TOY, str(tmp_path))
        back = read_dataset(str(tmp_path), "TOY")
        assert back.graphs == TOY.graphs
        assert back.labels == TOY.labels
        assert back.node_labels == TOY.node_labels

    def test_file_layout_bytes(self, tmp_path):
        write_dataset(TOY, str(tmp_path))
        a = (tmp_path / "TOY_A.txt").read_bytes()
        assert a == b"1, 2\n2, 1\n2, 3\n3, 2\n4, 5\n4, 6\n5, 4\n5, 6\n6, 4\n6, 5\n"
        indicator = (tmp_path / "TOY_graph_indicator.txt").read_bytes()
        assert indicator == b"1\n1\n1\n2\n2\n2\n"
        assert (tmp_path / "TOY_graph_labels.txt").read_bytes() == b"0\n1\n"
        assert (tmp_path / "TOY_node_labels.txt").read_bytes() == b"7\n8\n9\n1\n1\n2\n"

    def test_edgeless_graph_empty_edge_file(self, tmp_path):
        bundle = DatasetBundle("E", (Graph(2, []),), (0,))
        write_dataset(bundle, str(tmp_path))
        assert (tmp_path / "E_A.txt").read_bytes() == b""
        back = read_dataset(str(tmp_path), "E")
        assert back.graphs[0].num_edges == 0
        assert back.node_labels is None

    @settings(max_examples=30, deadline=None)
    @given(st.integers(0, 2 ** 31 - 1), st.integers(1, 12), st.booleans())
    def test_random_bundles_round_trip(self, seed, count, with_node_labels):
        bundle = synthetic_bundle(
            seed, count, connected=False, node_labels=with_node_labels
        )
        with tempfile.TemporaryDirectory() as target:
            write_dataset(bundle, target)
            back = read_dataset(target, bundle.name)
        assert back.graphs == bundle.graphs
        assert back.labels == bundle.labels
        assert back.node_labels == bundle.node_labels


class TestReadValidation:
    def test_missing_file_is_io_error(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            read_dataset(str(tmp_path), "NOPE")

    def _write(self, tmp_path, name, edges, indicator, labels, node_labels=None):
        (tmp_path / f"{name}_A.txt").write_text(edges)
        (tmp_path / f"{name}_graph_indicator.txt").write_text(indicator)
        (tmp_path / f"{name}_graph_labels.txt").write_text(labels)
        if node_labels is not None:
            (tmp_path / f"{name}_node_labels.txt").write_text(node_labels)

    def test_dangling_graph_id(self, tmp_path):
        self._write(tmp_path, "D", "", "1\n3\n", "5\n")
        with pytest.raises(DatasetFormatError, match="graph_indicator.txt:2"):
            read_dataset(str(tmp_path), "D")

    def test_dangling_node_id(self, tmp_path):
        self._write(tmp_path, "D", "1, 9\n", "1\n1\n", "5\n")
        with pytest.raises(DatasetFormatError, match="_A.txt:1"):
            read_dataset(str(tmp_path), "D")

    def test_edge_across_graphs(self, tmp_path):
        self._write(tmp_path, "D", "1, 3\n3, 1\n", "1\n1\n2\n2\n", "5\n6\n")
        with pytest.raises(DatasetFormatError, match="joins graphs"):
            read_dataset(str(tmp_path), "D")

    def test_graph_without_vertices(self, tmp_path):
        self._write(tmp_path, "D", "", "1\n1\n", "5\n6\n")
        with pytest.raises(DatasetFormatError, match="no vertices"):
            read_dataset(str(tmp_path), "D")

    def test_non_integer_line(self, tmp_path):
        self._write(tmp_path, "D", "", "x\n", "5\n")
        with pytest.raises(DatasetFormatError, match="expected an integer"):
            read_dataset(str(tmp_path), "D")

    def test_malformed_edge_line(self, tmp_path):
        self._write(tmp_path, "D", "1 2\n", "1\n1\n", "5\n")
        with pytest.raises(DatasetFormatError, match="expected 'u, v'"):
            read_dataset(str(tmp_path), "D")

    def test_node_label_count_mismatch(self, tmp_path):
        self._write(tmp_path, "D", "", "1\n1\n", "5\n", node_labels="2\n")
        with pytest.raises(DatasetFormatError, match="node labels"):
            read_dataset(str(tmp_path), "D")

    def test_labels_normalized_to_contiguous(self, tmp_path):
        self._write(tmp_path, "D", "1, 2\n2, 1\n", "1\n1\n2\n", "-1\n1\n")
        bundle = read_dataset(str(tmp_path), "D")
        assert bundle.labels == (0, 1)

    def test_loops_and_duplicates_dropped_with_warning(self, tmp_path, caplog):
        edges = "1, 1\n1, 2\n2, 1\n1, 2\n"
        self._write(tmp_path, "D", edges, "1\n1\n", "5\n")
        with caplog.at_level(logging.WARNING):
            bundle = read_dataset(str(tmp_path), "D")
        assert bundle.graphs[0].edges == ((0, 1),)
        assert "1 self-loop" in caplog.text
        assert "1 duplicate" in caplog.text

    def test_single_direction_listing_accepted_silently(self, tmp_path, caplog):
        self._write(tmp_path, "D", "1, 2\n", "1\n1\n", "5\n")
        with caplog.at_level(logging.WARNING):
            bundle = read_dataset(str(tmp_path), "D")
        assert bundle.graphs[0].edges == ((0, 1),)
        assert not caplog.records


class TestLeadersLog:
    def test_round_trip_with_empty_rows(self, tmp_path):
        rows = ((0, 2), (), (1,))
        write_leaders(str(tmp_path), "L", rows)
        content = (tmp_path / "L_leaders.txt").read_bytes()
        assert content == b"0 2\n\n1\n"
        assert read_leaders(str(tmp_path), "L") == rows

    def test_malformed_row(self, tmp_path):
        (tmp_path / "L_leaders.txt").write_text("0 x\n")
        with pytest.raises(DatasetFormatError):
            read_leaders(str(tmp_path), "L")


class TestSparsifyDataset:
    def test_trees_pass_through_unchanged(self):
        bundle = DatasetBundle("T", (path_graph(4), path_graph(2)), (0, 1))
        sparse, leaders = sparsify_dataset(bundle, "zfs")
        assert sparse.graphs == bundle.graphs
        assert all(len(row) >= 1 for row in leaders)

    def test_labels_pass_through(self):
        bundle = synthetic_bundle(3, 8, node_labels=True)
        sparse, _ = sparsify_dataset(bundle, "distance", seed=1)
        assert sparse.labels == bundle.labels
        assert sparse.node_labels == bundle.node_labels
        assert all(g.n == h.n for g, h in zip(bundle.graphs, sparse.graphs))

    def test_never_adds_edges(self):
        bundle = synthetic_bundle(4, 10)
        for method in ("zfs", "distance", "random_tree"):
            sparse, _ = sparsify_dataset(bundle, method, seed=0)
            for g, h in zip(bundle.graphs, sparse.graphs):
                assert set(h.edges) <= set(g.edges)

    def test_random_tree_leaders_empty(self):
        bundle = synthetic_bundle(5, 4)
        _, leaders = sparsify_dataset(bundle, "random_tree", seed=2)
        assert leaders == ((), (), (), ())

    def test_worker_pool_matches_serial(self):
        bundle = synthetic_bundle(6, 12)
        serial = sparsify_dataset(bundle, "random_tree", seed=9, jobs=1)
        pooled = sparsify_dataset(bundle, "random_tree", seed=9, jobs=3)
        assert serial[0].graphs == pooled[0].graphs
        assert serial[1] == pooled[1]

    def test_unknown_method(self):
        bundle = synthetic_bundle(7, 2)
        with pytest.raises(ValueError):
            sparsify_dataset(bundle, "mst")


class TestComputeStats:
    def test_toy_hand_values(self):
        report = compute_stats(TOY)
        assert report.graph_count == 2
        assert report.node_min == report.node_max == 3
        assert report.avg_degree_original == pytest.approx((4 / 3 + 2) / 2)
        assert report.density_min_original == pytest.approx(2 / 3)
        assert report.density_max_original == pytest.approx(1.0)
        assert report.avg_degree_backbone is None

    def test_misaligned_bundles_rejected(self):
        other = DatasetBundle("TOY", (path_graph(4), path_graph(3)), (0, 1))
        with pytest.raises(ValueError):
            compute_stats(TOY, other)
        with pytest.raises(ValueError):
            compute_stats(TOY, DatasetBundle("TOY", (path_graph(3),), (0,)))

    def test_single_vertex_graphs_skip_density(self):
        bundle = DatasetBundle("S", (Graph(1, []), path_graph(2)), (0, 0))
        report = compute_stats(bundle)
        assert report.density_min_original == report.density_max_original == 1.0

    def test_tree_method_closed_form(self):
        # spanning-forest output implies mean backbone average degree
        # equals mean of 2(n_i - c_i)/n_i without running the backbone
        bundle = synthetic_bundle(8, 15, connected=False)
        sparse, _ = sparsify_dataset(bundle, "zfs", seed=0)
        report = compute_stats(bundle, sparse)
        expected = np.mean(
            [
                2 * (g.n - connected_components(g).count) / g.n
                for g in bundle.graphs
            ]
        )
        assert report.avg_degree_backbone == pytest.approx(float(expected))
