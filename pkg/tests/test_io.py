import pytest

from hampath.graph import GraphError, from_edges
from hampath.io import format_edgelist, parse_dimacs, parse_edgelist


def test_edgelist_roundtrip():
    g = from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    assert parse_edgelist(format_edgelist(g)) == g


def test_edgelist_comments_and_blanks():
    text = "# a cycle\n\n3 3\n0 1\n# middle comment\n1 2\n2 0\n"
    g = parse_edgelist(text)
    assert g.n == 3 and g.m == 3


def test_edgelist_errors():
    with pytest.raises(GraphError):
        parse_edgelist("")
    with pytest.raises(GraphError):
        parse_edgelist("2 2\n0 1\n")  # claims two edges, provides one
    with pytest.raises(GraphError):
        parse_edgelist("2 1\n0 2\n")  # out of range


def test_empty_graph_parses():
    g = parse_edgelist("0 0\n")
    assert g.n == 0 and g.m == 0


def test_dimacs_basics():
    text = "c comment\np edge 3 2\ne 1 2\ne 2 3\n"
    g = parse_dimacs(text)
    assert g.n == 3 and g.has_edge(0, 1) and g.has_edge(1, 2)


def test_dimacs_errors():
    with pytest.raises(GraphError):
        parse_dimacs("e 1 2\n")
    with pytest.raises(GraphError):
        parse_dimacs("p edge 2 1\nx 1 2\n")
