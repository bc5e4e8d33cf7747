from collections import Counter

import pytest
from hypothesis import given

from impartial.graphs.core import Digraph, GraphError, UndirectedGraph, components
from impartial.graphs.signs import is_odd
from impartial.graphs.textio import parse_graph
from impartial.structure.cutting import (
    cut_minus_edge,
    format_trace,
    min_multiset,
    recursive_cutting,
    s_set,
)
from tests.strategies import PROPERTY_SETTINGS, forests, oriented, trees


def test_three_stage_example(example):
    trace = recursive_cutting(example("sec5-F"))
    assert len(trace) == 3
    assert trace.removed == (((8, 9), (15, 16)), ((2, 8), (3, 9)), ())
    sizes = sorted(len(c) for c in components(trace.final))
    assert sizes == [3] * 6


def test_directed_cutting_keeps_orientations(example):
    d = example("sec5-F-directed")
    trace = recursive_cutting(d)
    assert all(isinstance(stage, Digraph) for stage in trace.stages)
    assert trace.removed[0] == ((9, 8), (16, 15))
    assert set(trace.final.edges) <= set(d.edges)
    assert trace.final.underlying() == recursive_cutting(d.underlying()).final


def test_even_forest_is_a_single_stage(path_graph):
    trace = recursive_cutting(path_graph(3))
    assert trace.stages == (path_graph(3),)
    assert trace.removed == ((),)


def test_cutting_rejects_cycles(make_graph):
    with pytest.raises(GraphError):
        recursive_cutting(make_graph([(0, 1), (1, 2), (0, 2)]))


def test_cut_minus_edge_on_path(path_graph):
    p8 = path_graph(8)
    assert cut_minus_edge(p8, (0, 1)) == UndirectedGraph(8, ((1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7)))
    assert cut_minus_edge(p8, (1, 2)) == UndirectedGraph(8, ((2, 3), (3, 4), (5, 6), (6, 7)))
    assert cut_minus_edge(p8, (2, 1)) == cut_minus_edge(p8, (1, 2))


def test_cut_minus_edge_rejects_non_edge(path_graph):
    with pytest.raises(GraphError, match="not an edge"):
        cut_minus_edge(path_graph(4), (0, 2))


@pytest.mark.parametrize(
    ("edge", "expected"),
    [
        ((0, 1), [(0, 1), (6, 7)]),
        ((2, 3), [(2, 3), (4, 5)]),
        ((1, 2), [(0, 1), (1, 2), (2, 3), (4, 5), (5, 6), (6, 7)]),
    ],
)
def test_s_set_on_path(example, edge, expected):
    p8 = example("path8")
    assert s_set(p8, cut_minus_edge(p8, edge)) == expected


def test_s_set_rejects_odd_and_edgeless(path_graph, make_graph):
    with pytest.raises(GraphError, match="even"):
        s_set(path_graph(4), make_graph([(0, 1)], n=4))
    with pytest.raises(GraphError, match="at least one edge"):
        s_set(path_graph(4), UndirectedGraph(4))
    with pytest.raises(GraphError, match="differ"):
        s_set(path_graph(4), path_graph(3))


def test_min_multiset_two_joined_paths(example):
    g = example("sec7-G")
    values = min_multiset(g, g)
    assert values.counts() == Counter({1: 4, 2: 4, 3: 4, 4: 2, 8: 1})
    assert values.values == tuple(sorted(values.values))


def test_format_trace(path_graph):
    text = format_trace(recursive_cutting(path_graph(4)))
    assert text == "graph 4\n0 1\n1 2\n2 3\nremoved: 1 2\n---\ngraph 4\n0 1\n2 3\nremoved: 0 1, 2 3\n---\ngraph 4\nremoved:\n"
    first = text.split("---\n")[0]
    assert parse_graph(first.split("removed:")[0]) == path_graph(4)


@PROPERTY_SETTINGS
@given(f=forests(max_size=12))
def test_final_stage_is_even_and_stages_shrink(f):
    trace = recursive_cutting(f)
    assert not is_odd(trace.final)
    assert len(trace.removed) == len(trace.stages)
    assert trace.removed[-1] == ()
    for before, after, cut in zip(trace.stages, trace.stages[1:], trace.removed):
        assert len(cut) >= 1
        assert set(after.edges) == set(before.edges) - set(cut)


@PROPERTY_SETTINGS
@given(d=oriented(trees(max_size=12)))
def test_cutting_commutes_with_forgetting_orientation(d):
    directed = recursive_cutting(d)
    plain = recursive_cutting(d.underlying())
    assert [s.underlying() for s in directed.stages] == list(plain.stages)
