from __future__ import annotations

from itertools import combinations

import pytest
from conftest import graphs, two_k2
from hypothesis import given, settings

from twowalk.generators import fixed_graph
from twowalk.graph import (
    EdgeClass,
    Graph,
    MultiGraph,
    ParseError,
    Walk,
    components,
    induced,
    is_clique,
    multigraph_degree,
    parse_graph,
    serialize_graph,
)


class TestParse:
    def test_triangle(self):
        g = parse_graph("p 3 3\ne 0 1\ne 1 2\ne 2 0\n")
        assert g == Graph.complete(3)

    def test_two_k2(self):
        assert parse_graph("p 4 2\ne 0 1\ne 2 3\n") == two_k2()

    def test_self_loop_names_line(self):
        with pytest.raises(ParseError) as info:
            parse_graph("p 2 1\n# note\ne 0 0\n")
        assert info.value.line == 3
        assert "loop" in str(info.value)

    def test_duplicates_collapse(self):
        g = parse_graph("e 0 1\ne 1 0\ne 0 1\n")
        assert g.m == 1 and g.n == 2

    def test_comments_and_blank_lines(self):
        g = parse_graph("# hi\n\np 3 1\n  e 0 2  # trailing\n")
        assert g.n == 3 and g.edges() == [(0, 2)]

    @pytest.mark.parametrize(
        "text",
        ["p 2 1\ne 0 5\n", "e 0 x\n", "e 0\n", "q 1 2\n", "p 3 0\np 3 0\n", "e 0 1\np 3 1\n", "e -1 2\n"],
    )
    def test_malformed(self, text):
        with pytest.raises(ParseError):
            parse_graph(text)

    def test_header_allows_isolated_vertices(self):
        g = parse_graph("p 5 1\ne 0 1\n")
        assert g.n == 5 and len(components(g)) == 4

    def test_serialize_is_sorted_and_exact(self):
        g = Graph.from_edges(3, [(2, 1), (1, 0)])
        assert serialize_graph(g) == "p 3 2\ne 0 1\ne 1 2\n"
        assert serialize_graph(g, comment="x").startswith("# x\n")

    @settings(max_examples=150, deadline=None)
    @given(graphs(max_n=12))
    def test_round_trip(self, g):
        assert parse_graph(serialize_graph(g)) == g


class TestQueries:
    def test_components(self):
        assert len(components(two_k2())) == 2
        assert len(components(Graph.complete(4))) == 1
        assert len(components(Graph(3, (frozenset(),) * 3))) == 3

    def test_induced_c5_gives_p4(self):
        c5 = Graph.cycle(5)
        for s in combinations(range(5), 4):
            h, ids = induced(c5, s)
            assert ids == s
            degs = sorted(h.degree(v) for v in range(4))
            assert h.m == 3 and degs == [1, 1, 2, 2] and len(components(h)) == 1

    def test_induced_small_cases(self):
        h, _ = induced(Graph.complete(4), [1, 3])
        assert h == Graph.complete(2)
        h, ids = induced(Graph.complete(4), [])
        assert h.n == 0 and ids == ()

    def test_induced_out_of_range(self):
        with pytest.raises(ValueError):
            induced(Graph.complete(3), [0, 7])

    def test_is_clique(self):
        assert is_clique(two_k2(), [2])
        assert not is_clique(two_k2(), range(4))
        assert is_clique(fixed_graph("G1"), [0, 1, 2, 3])

    def test_complement(self):
        assert Graph.cycle(4).complement() == Graph.from_edges(4, [(0, 2), (1, 3)])

    @settings(max_examples=150, deadline=None)
    @given(graphs())
    def test_degree_sum(self, g):
        assert sum(g.degree(v) for v in range(g.n)) == 2 * g.m

    @settings(max_examples=100, deadline=None)
    @given(graphs())
    def test_induced_on_everything_is_identity(self, g):
        h, ids = induced(g, range(g.n))
        assert h == g and ids == tuple(range(g.n))


class TestMultiGraph:
    def test_degrees(self):
        h = MultiGraph(3)
        assert multigraph_degree(h, 0) == 0
        h.add(0, 1, EdgeClass.THIRD)
        h.add(1, 0, EdgeClass.THIRD)
        assert multigraph_degree(h, 0) == 2
        assert h.multiplicity(0, 1) == 2

    def test_loops_rejected(self):
        with pytest.raises(ValueError):
            MultiGraph(2).add(1, 1, EdgeClass.RED)

    def test_w1_in_g2_gamma(self):
        from twowalk.pipeline import two_walk

        gamma = two_walk(fixed_graph("G2")).trace.gamma
        assert multigraph_degree(gamma.graph, 0) == 4


class TestWalk:
    def test_closed_walk_counts_start_once(self):
        w = Walk([0, 1, 0])
        assert w.visit_counts == {0: 1, 1: 1}

    def test_single_vertex(self):
        assert Walk([0]).visit_counts == {0: 1}
