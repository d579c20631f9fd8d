"""Tests for edge-list and graph6 ingestion."""

import networkx as nx
import pytest


def test_parse_edge_list_with_comments_and_blanks():
    from src.cli.parser import parse_edge_list

    text = "# K4 minus an edge\n0 1\n0 2  # spoke\n\n0 3\n1 2\n1 3\n"
    g = parse_edge_list(text)
    assert g.sorted_edges() == [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]


def test_parse_edge_list_accepts_tabs_and_reversed_pairs():
    from src.cli.parser import parse_edge_list

    g = parse_edge_list("1\t0\n2 1\n")
    assert g.sorted_edges() == [(0, 1), (1, 2)]


@pytest.mark.parametrize(
    "text, line",
    [
        ("0 1\n0 x\n", 2),
        ("0 1 2\n", 1),
        ("0 1\n\n-1 2\n", 3),
        ("0\n", 1),
        ("0 1\n² 3\n", 2),
        ("0 1\n1 ٣\n", 2),
    ],
)
def test_malformed_lines_report_line_number(text, line):
    from src.cli.parser import parse_edge_list
    from src.utils.errors import ParseError

    with pytest.raises(ParseError) as exc_info:
        parse_edge_list(text)
    assert exc_info.value.line == line
    assert str(exc_info.value).startswith(f"line {line}: ")


def test_self_loop_is_a_parse_error():
    from src.cli.parser import parse_edge_list
    from src.utils.errors import ParseError

    with pytest.raises(ParseError) as exc_info:
        parse_edge_list("0 1\n2 2\n")
    assert exc_info.value.line == 2


def test_duplicate_edge_is_a_parse_error():
    from src.cli.parser import parse_edge_list
    from src.utils.errors import ParseError

    with pytest.raises(ParseError) as exc_info:
        parse_edge_list("0 1\n1 2\n1 0\n")
    assert exc_info.value.line == 3
    assert "first seen on line 1" in str(exc_info.value)


def test_empty_input():
    from src.cli.parser import parse_edge_list
    from src.utils.errors import ParseError

    with pytest.raises(ParseError):
        parse_edge_list("# nothing here\n\n")


def test_parse_graph6():
    from src.cli.parser import parse_graph6

    prism = nx.circular_ladder_graph(3)
    text = nx.to_graph6_bytes(prism, header=False).decode("ascii")
    g = parse_graph6(text)
    assert nx.is_isomorphic(g.to_networkx(), prism)


def test_parse_graph6_with_header():
    from src.cli.parser import parse_graph6

    text = nx.to_graph6_bytes(nx.complete_graph(3), header=True).decode("ascii")
    assert parse_graph6(text).n_edges == 3


def test_invalid_graph6():
    from src.cli.parser import parse_graph6
    from src.utils.errors import ParseError

    with pytest.raises(ParseError):
        parse_graph6("\n")
    with pytest.raises(ParseError):
        parse_graph6("C~~~~\n")


def test_format_edge_list_reads_back():
    from src.cli.parser import format_edge_list, parse_edge_list
    from src.rigidity.laman import SimpleGraph

    g = SimpleGraph.from_edges([(0, 1), (0, 2), (1, 2)])
    text = format_edge_list(g, header="triangle")
    assert text == "# triangle\n0 1\n0 2\n1 2\n"
    assert parse_edge_list(text) == g
