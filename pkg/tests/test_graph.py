import io

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import vitalrank as vr
from helpers import (
    complete_graph,
    floyd_distances,
    lab,
    path_graph,
    random_graph,
    star_graph,
)


class TestParsing:
    def test_p3(self):
        g = vr.parse_edge_list("1 2\n2 3")
        assert g.node_count == 3
        assert g.edge_count == 2
        assert g.labels == ("1", "2", "3")
        assert list(g.neighbors(g.index_of("2"))) == [0, 2]

    def test_dedup_and_self_loops(self):
        g = vr.parse_edge_list("a b\nb a\na a")
        assert g.node_count == 2
        assert g.edge_count == 1
        assert g.report.self_loops_dropped == 1
        assert g.report.duplicate_edges_dropped == 1

    def test_star_degrees(self):
        g = vr.parse_edge_list("1 2\n1 3\n1 4")
        assert g.labels == ("1", "2", "3", "4")
        assert g.degrees.tolist() == [3, 1, 1, 1]

    def test_comments_and_blank_lines(self):
        g = vr.parse_edge_list("# header\n\n% other comment\na b\n\nb c\n")
        assert g.node_count == 3 and g.edge_count == 2

    def test_malformed_line_reports_number(self):
        with pytest.raises(vr.EdgeListParseError) as exc:
            vr.parse_edge_list("a b\na b c\n")
        assert exc.value.line_number == 2

    def test_single_token_line(self):
        with pytest.raises(vr.EdgeListParseError):
            vr.parse_edge_list("a\n")

    def test_empty_input(self):
        for text in ("", "   \n", "# only a comment\n"):
            with pytest.raises(vr.EdgeListParseError):
                vr.parse_edge_list(text)

    def test_self_loop_only_node_kept_isolated(self):
        g = vr.parse_edge_list("a a\nb c")
        assert g.node_count == 3
        assert int(g.degrees[g.index_of("a")]) == 0
        assert g.report.component_sizes == (2, 1)

    def test_file_object_source(self):
        g = vr.parse_edge_list(io.StringIO("x y\ny z"))
        assert g.node_count == 3

    def test_from_edges_keeps_seeded_labels(self):
        g = vr.Graph.from_edges([("b", "c")], labels=["a", "b", "c"])
        assert g.labels == ("a", "b", "c")
        assert int(g.degrees[0]) == 0

    @settings(max_examples=30, deadline=None)
    @given(st.permutations(["1 2", "2 3", "3 4", "4 1", "1 3", "5 1"]))
    def test_line_order_insensitive(self, lines):
        base = vr.parse_edge_list("\n".join(["1 2", "2 3", "3 4", "4 1", "1 3", "5 1"]))
        g = vr.parse_edge_list("\n".join(lines))
        assert sorted(g.degrees.tolist()) == sorted(base.degrees.tolist())
        da = np.sort(vr.all_pairs_shortest_paths(g).dist, axis=None)
        db = np.sort(vr.all_pairs_shortest_paths(base).dist, axis=None)
        assert np.array_equal(da, db)


class TestShortestPaths:
    def test_p3_endpoints(self):
        g = path_graph(3)
        d = vr.all_pairs_shortest_paths(g)
        assert d.dist[0, 2] == 2
        assert d.dist[2, 0] == 2

    def test_star_leaf_to_leaf(self):
        g = star_graph(3)
        d = vr.all_pairs_shortest_paths(g).dist
        for i in range(1, 4):
            for j in range(1, 4):
                if i != j:
                    assert d[i, j] == 2

    def test_disconnected_sentinel(self):
        g = vr.parse_edge_list("1 2\n3 4")
        d = vr.all_pairs_shortest_paths(g).dist
        assert d[g.index_of("1"), g.index_of("3")] == vr.UNREACHABLE

    def test_matches_relaxation_oracle(self):
        rng = np.random.default_rng(11)
        for _ in range(12):
            g = random_graph(int(rng.integers(2, 40)), 0.15, rng)
            got = vr.all_pairs_shortest_paths(g).dist
            assert np.array_equal(got, floyd_distances(g))

    def test_symmetry_diagonal_triangle(self):
        rng = np.random.default_rng(5)
        for _ in range(8):
            g = random_graph(20, 0.2, rng)
            d = vr.all_pairs_shortest_paths(g).dist
            assert np.array_equal(d, d.T)
            assert np.all(np.diag(d) == 0)
            reach = d >= 0
            big = np.where(reach, d, 10**6)
            n = g.node_count
            for k in range(n):
                # triangle inequality over reachable triples
                assert np.all(big <= big[:, [k]] + big[[k], :] + 0)

    def test_threads_identical(self):
        rng = np.random.default_rng(9)
        g = random_graph(40, 0.1, rng)
        a = vr.all_pairs_shortest_paths(g, threads=1).dist
        b = vr.all_pairs_shortest_paths(g, threads=5).dist
        assert np.array_equal(a, b)


class TestMeanPath:
    def test_p5(self):
        d = vr.all_pairs_shortest_paths(path_graph(5))
        assert vr.mean_shortest_path(d) == pytest.approx(2.0, abs=1e-12)

    def test_k3(self):
        d = vr.all_pairs_shortest_paths(complete_graph(3))
        assert vr.mean_shortest_path(d) == pytest.approx(1.0, abs=1e-12)

    def test_star_k14(self):
        d = vr.all_pairs_shortest_paths(star_graph(4))
        assert vr.mean_shortest_path(d) == pytest.approx(1.6, abs=1e-12)

    def test_reachable_pairs_only(self):
        d = vr.all_pairs_shortest_paths(vr.parse_edge_list("1 2\n3 4"))
        assert vr.mean_shortest_path(d) == pytest.approx(1.0)

    def test_edgeless_errors(self):
        g = vr.Graph.from_edges([], labels=["a", "b"])
        d = vr.all_pairs_shortest_paths(g)
        with pytest.raises(ValueError):
            vr.mean_shortest_path(d)


class TestClustering:
    def test_triangle_corner(self):
        g = complete_graph(3)
        assert vr.local_clustering(g, lab(0)) == pytest.approx(0.5)

    def test_tree_nodes_zero(self):
        g = path_graph(6)
        for i in range(6):
            assert vr.local_clustering(g, lab(i)) == 0.0

    def test_k4(self):
        g = complete_graph(4)
        assert vr.local_clustering(g, lab(1)) == pytest.approx(0.5)

    def test_all_matches_single(self):
        rng = np.random.default_rng(17)
        for _ in range(6):
            g = random_graph(18, 0.25, rng)
            allv = vr.local_clustering_all(g)
            single = [vr.local_clustering(g, l) for l in g.labels]
            assert np.allclose(allv, single, atol=1e-12)


class TestStructure:
    def test_degree_sum_is_twice_edges(self):
        rng = np.random.default_rng(2)
        for _ in range(10):
            g = random_graph(25, 0.2, rng)
            assert int(g.degrees.sum()) == 2 * g.edge_count

    def test_components(self):
        g = vr.parse_edge_list("1 2\n2 3\n4 5")
        comps = vr.connected_components(g)
        assert sorted(c.size for c in comps) == [2, 3]

    def test_induced_subgraph(self):
        g = star_graph(3)
        sub = vr.induced_subgraph(g, [lab(0), lab(1), lab(2)])
        assert sub.node_count == 3
        assert sub.edge_count == 2
        assert sub.labels == (lab(0), lab(1), lab(2))
        lone = vr.induced_subgraph(g, [lab(1), lab(2)])
        assert lone.edge_count == 0
