import pytest
from hypothesis import given

from prismhull import Graph, ParseError
from prismhull.edgelist import (
    format_edgelist,
    parse_edgelist,
    read_edgelist,
    write_edgelist,
)

from oracles import graphs


def test_format_example():
    g = Graph(4, [(1, 2), (0, 1)])
    assert format_edgelist(g) == "4 2\n0 1\n1 2\n"


def test_comments_and_blank_lines_ignored():
    text = "# a comment\n\n3 2\n0 1\n# interlude\n\n1 2\n"
    assert parse_edgelist(text) == Graph(3, [(0, 1), (1, 2)])


def test_empty_graph_round_trip():
    assert parse_edgelist("0 0\n") == Graph(0)


@given(graphs())
def test_round_trip(g):
    assert parse_edgelist(format_edgelist(g)) == g


def test_file_round_trip(tmp_path):
    g = Graph(5, [(0, 4), (1, 3)])
    path = tmp_path / "g.txt"
    write_edgelist(g, path)
    assert read_edgelist(path) == g


@pytest.mark.parametrize(
    "text,fragment",
    [
        ("", "header"),
        ("3\n", "header"),
        ("x y\n", "x"),
        ("3 1\n", "1 edges, found 0"),
        ("3 1\n0 1\n1 2\n", "1 edges, found 2"),
        ("3 1\n0\n", "0"),
        ("3 1\n1 0\n", "u < v"),
        ("3 1\n1 1\n", "u < v"),
        ("3 1\n0 3\n", "outside range"),
        ("3 2\n0 1\n0 1\n", "duplicate"),
        ("3 1\n0 q\n", "q"),
        ("-1 0\n", "non-negative"),
    ],
)
def test_malformed_input_names_the_offender(text, fragment):
    with pytest.raises(ParseError, match=fragment):
        parse_edgelist(text)
