import networkx as nx
import pytest
from hypothesis import given

from conftest import graphs
from oracles import edge_set, to_nx
from vmkit.families import cycle
from vmkit.io import ParseError, from_graph6, read_graph, to_graph6, write_graph


@given(graphs(max_n=14))
def test_graph6_agrees_with_networkx(g):
    text = to_graph6(g)
    assert text == nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
    assert edge_set(from_graph6(text)) == edge_set(g)


@given(graphs(max_n=10))
def test_edge_list_round_trip(g):
    assert read_graph(write_graph(g, "edges")) == g


def test_large_graph6_header():
    g = cycle(100)
    text = to_graph6(g)
    assert text.startswith("~")
    assert text == nx.to_graph6_bytes(nx.cycle_graph(100), header=False).decode().strip()
    assert from_graph6(text) == g


def test_cycle7_is_byte_stable():
    text = to_graph6(cycle(7))
    assert to_graph6(read_graph(text)) == text


def test_auto_detect():
    assert read_graph("3 1\n0 1\n").m == 1
    assert read_graph("# comment\n2 0\n").n == 2
    assert read_graph("Bw\n").n == 3


def test_edge_list_errors_name_line_and_column():
    with pytest.raises(ParseError) as err:
        read_graph("3 1\n0 x\n")
    assert (err.value.line, err.value.column) == (2, 3)
    with pytest.raises(ParseError) as err:
        read_graph("3 2\n0 1\n")
    assert err.value.line == 2
    with pytest.raises(ParseError) as err:
        read_graph("3 1\n0 7\n")
    assert (err.value.line, err.value.column) == (2, 3)
    with pytest.raises(ParseError):
        read_graph("3 1\n1 1\n")


def test_graph6_errors():
    with pytest.raises(ParseError) as err:
        read_graph("D h\n")
    assert err.value.column == 2
    with pytest.raises(ParseError):
        read_graph("Dh")  # truncated body
    with pytest.raises(ParseError):
        read_graph("A_\nA_\n")
