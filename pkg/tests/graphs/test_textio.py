import pytest

from impartial.graphs.core import Digraph, UndirectedGraph
from impartial.graphs.textio import ParseError, format_graph, load_graph, parse_digraph, parse_graph


def test_parse_digraph_with_comments():
    text = "# intro example\ndigraph 4\n0 1   # first edge\n2 1\n\n3 2\n"
    assert parse_graph(text) == Digraph(4, ((0, 1), (2, 1), (3, 2)))


def test_parse_undirected():
    assert parse_graph("graph 3\n2 1\n") == UndirectedGraph(3, ((1, 2),))


def test_format_is_parseable():
    d = Digraph(3, ((2, 0), (1, 2)))
    text = format_graph(d)
    assert text == "digraph 3\n1 2\n2 0\n"
    assert parse_graph(text) == d


def test_empty_graph_format():
    assert format_graph(UndirectedGraph(2)) == "graph 2\n"


def test_missing_header():
    with pytest.raises(ParseError, match="missing"):
        parse_graph("# nothing here\n")


def test_bad_header_reports_position():
    with pytest.raises(ParseError) as exc:
        parse_graph("\n  tree 3\n")
    assert exc.value.line == 2
    assert exc.value.column == 3


def test_non_integer_vertex():
    with pytest.raises(ParseError) as exc:
        parse_graph("digraph 3\n0 x\n")
    assert (exc.value.line, exc.value.column) == (2, 3)
    assert "line 2, column 3" in str(exc.value)


def test_duplicate_edge():
    with pytest.raises(ParseError, match="duplicate"):
        parse_graph("digraph 3\n0 1\n0 1\n")


def test_anti_parallel_edge():
    with pytest.raises(ParseError, match="anti-parallel") as exc:
        parse_graph("digraph 3\n0 1\n1 0\n")
    assert exc.value.line == 3


def test_undirected_reversed_pair_is_duplicate():
    with pytest.raises(ParseError, match="duplicate"):
        parse_graph("graph 3\n0 1\n1 0\n")


def test_self_loop():
    with pytest.raises(ParseError, match="self-loop"):
        parse_graph("digraph 3\n2 2\n")


def test_out_of_range_vertex():
    with pytest.raises(ParseError, match="out of range") as exc:
        parse_graph("digraph 3\n0 3\n")
    assert exc.value.column == 3


def test_wrong_field_count():
    with pytest.raises(ParseError, match="fields"):
        parse_graph("digraph 3\n0 1 2\n")


def test_parse_digraph_rejects_undirected():
    with pytest.raises(ParseError):
        parse_digraph("graph 2\n0 1\n")


def test_load_graph(tmp_path):
    path = tmp_path / "g.txt"
    path.write_text("digraph 2\n1 0\n")
    assert load_graph(path) == Digraph(2, ((1, 0),))


def test_parse_digraph_reports_header_position():
    with pytest.raises(ParseError) as exc:
        parse_digraph("# undirected\n\n  graph 2\n0 1\n")
    assert (exc.value.line, exc.value.column) == (3, 3)


def test_load_graph_invalid_utf8(tmp_path):
    path = tmp_path / "g.txt"
    path.write_bytes(b"digraph 2\n0 \xff1\n")
    with pytest.raises(ParseError, match="invalid UTF-8") as exc:
        load_graph(path)
    assert (exc.value.line, exc.value.column) == (2, 3)
