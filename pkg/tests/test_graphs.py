"""Graph representation, parsing, statistics and the Zagreb lower bound."""

import pytest
from hypothesis import given, strategies as st

from mixedspec.graphs import (
    GraphFormatError,
    MixedGraph,
    graph_stats,
    parse_graph,
    random_mixed_graph,
    serialize_graph,
    zagreb_lower_bound,
)


@st.composite
def graphs(draw, max_n=12):
    n = draw(st.integers(1, max_n))
    edge_prob = draw(st.floats(0.0, 1.0))
    orient_prob = draw(st.floats(0.0, 1.0))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_mixed_graph(n, edge_prob, orient_prob, seed)


class TestMixedGraph:
    def test_rejects_self_loop(self):
        with pytest.raises(ValueError, match="self-loop"):
            MixedGraph(n=3, undirected=frozenset(), arcs=frozenset({(1, 1)}))

    def test_rejects_duplicate_pair_across_sets(self):
        with pytest.raises(ValueError, match="duplicate"):
            MixedGraph(n=2, undirected=frozenset({(0, 1)}), arcs=frozenset({(1, 0)}))

    def test_rejects_out_of_range_vertex(self):
        with pytest.raises(ValueError):
            MixedGraph(n=2, undirected=frozenset(), arcs=frozenset({(0, 5)}))

    def test_rejects_non_canonical_undirected_pair(self):
        with pytest.raises(ValueError):
            MixedGraph(n=3, undirected=frozenset({(2, 0)}), arcs=frozenset())

    def test_rejects_zero_vertices(self):
        with pytest.raises(ValueError):
            MixedGraph(n=0, undirected=frozenset(), arcs=frozenset())


class TestParse:
    def test_single_arc(self):
        g = parse_graph("2\n1 -> 2")
        assert g.n == 2
        assert g.arcs == frozenset({(0, 1)})
        assert g.undirected == frozenset()

    def test_cyclic_triangle(self):
        g = parse_graph("3\n1 -> 2\n2 -> 3\n3 -> 1")
        assert g.arcs == frozenset({(0, 1), (1, 2), (2, 0)})

    def test_duplicate_underlying_pair_rejected(self):
        with pytest.raises(GraphFormatError, match="duplicate"):
            parse_graph("2\n1 -- 2\n2 -> 1")

    def test_comments_and_blank_lines(self):
        g = parse_graph("# header\n3\n\n1 -- 2  # tail comment\n")
        assert g.undirected == frozenset({(0, 1)})

    def test_error_reports_line_number(self):
        with pytest.raises(GraphFormatError, match="line 3"):
            parse_graph("3\n1 -- 2\n1 - 3\n")

    def test_self_loop_rejected(self):
        with pytest.raises(GraphFormatError, match="self-loop"):
            parse_graph("3\n2 -> 2\n")

    def test_label_out_of_range(self):
        with pytest.raises(GraphFormatError, match="out of range"):
            parse_graph("2\n1 -> 3\n")

    def test_empty_input(self):
        with pytest.raises(GraphFormatError, match="vertex count"):
            parse_graph("# nothing here\n")

    def test_vertex_count_not_integer(self):
        with pytest.raises(GraphFormatError, match="line 1"):
            parse_graph("two\n")


class TestStats:
    def test_single_arc(self, p2):
        s = graph_stats(p2)
        assert (s.n, s.m, s.arc_count, s.undirected_count) == (2, 1, 1, 0)
        assert s.degrees == (1, 1)
        assert (s.max_degree, s.min_degree, s.zagreb) == (1, 1, 2)

    def test_cyclic_triangle(self, c3):
        s = graph_stats(c3)
        assert (s.n, s.m, s.arc_count, s.undirected_count) == (3, 3, 3, 0)
        assert s.degrees == (2, 2, 2)
        assert s.zagreb == 12

    def test_star(self, k13):
        s = graph_stats(k13)
        assert (s.n, s.m, s.arc_count, s.undirected_count) == (4, 3, 0, 3)
        assert s.degrees == (3, 1, 1, 1)
        assert (s.max_degree, s.min_degree, s.zagreb) == (3, 1, 12)

    @given(graphs())
    def test_edge_count_and_degree_sum(self, g):
        s = graph_stats(g)
        assert s.m == s.arc_count + s.undirected_count
        assert sum(s.degrees) == 2 * s.m


class TestZagrebLowerBound:
    def test_star_equality(self, k13):
        # 4m^2/n + (Dmax-Dmin)^2/2 + (2n/(n-2))(2m/n - (Dmax+Dmin)/2)^2 = 9+2+1
        s = graph_stats(k13)
        assert zagreb_lower_bound(s) == pytest.approx(12.0, abs=1e-12)

    def test_regular_equality(self, c3):
        assert zagreb_lower_bound(graph_stats(c3)) == pytest.approx(12.0, abs=1e-12)

    def test_two_vertices_rejected(self, p2):
        with pytest.raises(ValueError, match="n >= 3"):
            zagreb_lower_bound(graph_stats(p2))

    @given(graphs())
    def test_never_exceeds_zagreb_index(self, g):
        s = graph_stats(g)
        if s.n >= 3:
            assert zagreb_lower_bound(s) <= s.zagreb + 1e-9


class TestRandomGraph:
    def test_deterministic_for_fixed_seed(self):
        a = random_mixed_graph(10, 0.3, 0.5, 42)
        b = random_mixed_graph(10, 0.3, 0.5, 42)
        assert a == b

    def test_zero_edge_prob_gives_empty_graph(self):
        g = random_mixed_graph(5, 0.0, 0.5, 1)
        assert g.edge_count == 0

    def test_full_undirected(self):
        g = random_mixed_graph(4, 1.0, 0.0, 3)
        assert len(g.undirected) == 6
        assert not g.arcs

    def test_full_arcs(self):
        g = random_mixed_graph(4, 1.0, 1.0, 3)
        assert len(g.arcs) == 6
        assert not g.undirected

    def test_rejects_bad_probabilities(self):
        with pytest.raises(ValueError):
            random_mixed_graph(4, 1.5, 0.0, 0)
        with pytest.raises(ValueError):
            random_mixed_graph(4, 0.5, -0.1, 0)

    def test_rejects_zero_vertices(self):
        with pytest.raises(ValueError):
            random_mixed_graph(0, 0.5, 0.5, 0)


class TestSerialize:
    def test_canonical_form(self, k13):
        assert serialize_graph(k13) == "4\n1 -- 2\n1 -- 3\n1 -- 4\n"

    def test_arcs_after_edges(self):
        g = parse_graph("3\n2 -> 1\n1 -- 3\n")
        assert serialize_graph(g) == "3\n1 -- 3\n2 -> 1\n"

    @given(graphs())
    def test_parse_inverts_serialize(self, g):
        assert parse_graph(serialize_graph(g)) == g
