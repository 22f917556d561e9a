from __future__ import annotations

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from conftest import two_k2
from twowalk.generators import fixed_graph, gen_co_chordal, gen_split
from twowalk.graph import Graph, is_connected
from twowalk.tower import CliqueTower, NotTwoK2Free, clique_tower, validate_tower


def checks(report) -> set[str]:
    return {c for c, _ in report.violations}


def test_k4_single_clique():
    t = clique_tower(Graph.complete(4))
    assert t.cliques == ((0, 1, 2, 3),) and t.levels == ((),)


def test_g1():
    t = clique_tower(fixed_graph("G1"))
    assert t.k == 1
    assert t.cliques == ((0, 1, 2, 3),)
    assert t.levels == ((4, 5),)


def test_g2():
    t = clique_tower(fixed_graph("G2"))
    assert t.cliques == ((0, 1, 2, 3), (4, 5))
    assert t.levels == ((6,), ())
    assert t.first_class_vertices == (6,)


def test_serialize():
    t = clique_tower(fixed_graph("G2"))
    assert t.serialize() == "Q1: 0 1 2 3\nD1: 6\nQ2: 4 5\nD2:\n"


def test_isolated_vertices_join_first_level():
    g = Graph.from_edges(5, [(0, 1), (1, 2), (0, 2)])
    t = clique_tower(g)
    assert t.levels == ((3, 4),)
    assert validate_tower(g, t)


def test_two_edge_components_rejected():
    # hub 0 joined to three disjoint edges; removing {0,1,2} leaves 34 and 56
    g = Graph.from_edges(7, [(0, v) for v in range(1, 7)] + [(1, 2), (3, 4), (5, 6)])
    with pytest.raises(NotTwoK2Free) as info:
        clique_tower(g)
    assert info.value.witness is not None


def test_edgeless_rejected():
    with pytest.raises(ValueError):
        clique_tower(Graph(2, (frozenset(), frozenset())))


class TestValidate:
    def test_d_not_independent(self):
        g = Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (1, 4)])
        bad = CliqueTower(((0, 1, 2),), ((3, 4),))
        assert "D not independent" in checks(validate_tower(g, bad))

    def test_sizes_not_non_increasing(self):
        g = fixed_graph("G2")
        bad = CliqueTower(((4, 5), (0, 1, 2, 3)), ((), (6,)))
        assert "sizes not non-increasing" in checks(validate_tower(g, bad))

    def test_partition_and_clique(self):
        g = fixed_graph("G1")
        assert "partition" in checks(validate_tower(g, CliqueTower(((0, 1, 2, 3),), ((4,),))))
        assert "clique" in checks(validate_tower(g, CliqueTower(((0, 1, 5),), ((2, 3, 4),))))

    def test_missing_cross_edge(self):
        g = Graph.from_edges(4, [(0, 1), (2, 3)])
        assert "cross edge" in checks(validate_tower(g, CliqueTower(((0, 1), (2, 3)), ((), ()))))

    def test_unsorted_input_graph_still_ok(self):
        assert validate_tower(two_k2().complement(), clique_tower(two_k2().complement()))


def corpus_graph(draw) -> Graph:
    if draw(st.booleans()):
        return gen_co_chordal(draw(st.integers(2, 14)), draw(st.floats(0.1, 0.9)), draw(st.integers(0, 2**32)))
    return gen_split(
        draw(st.integers(2, 9)), draw(st.integers(0, 6)), draw(st.floats(0, 1)), draw(st.integers(0, 2**32))
    )


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_tower_properties(data):
    g = corpus_graph(data.draw)
    assume(g.m > 0 and is_connected(g))
    t = clique_tower(g)
    assert t == clique_tower(g)
    assert validate_tower(g, t)
    # later cliques are weakly dominated by earlier ones
    for i, qi in enumerate(t.cliques):
        seen = set().union(*(g.adj[v] for v in qi))
        for qj in t.cliques[i + 1 :]:
            for a in qj:
                for b in qj:
                    if a < b:
                        assert a in seen or b in seen
