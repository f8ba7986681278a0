import networkx as nx
import pytest
from hypothesis import given, settings

from named import k4
from oracles import nx_multigraph
from strategies import simple_graphs
from truncmatroid import Graph6Error, parse_graph6, write_graph6
from truncmatroid.generate import enumerate_graphs
from truncmatroid.graph import strongly_isomorphic
from truncmatroid.graph6 import read_graph6_lines


def test_k4():
    g = parse_graph6("C~")
    assert g.n == 4 and g.m == 6
    assert strongly_isomorphic(g, k4())


def test_empty_three_vertices():
    g = parse_graph6("B?")
    assert g.n == 3 and g.m == 0


def test_edge_labels_follow_bit_order():
    g = parse_graph6("CN")  # 4 vertices
    pairs = [tuple(sorted(g.ends(x))) for x in g.labels]
    assert pairs == sorted(pairs)
    assert list(g.labels) == list(range(1, g.m + 1))


@pytest.mark.parametrize("text", ["C~", "B?", "CN", "C]", "D]{", "EFz_", "@"])
def test_round_trip(text):
    assert write_graph6(parse_graph6(text)) == text


def test_round_trip_enumerated():
    for g in enumerate_graphs(5):
        assert parse_graph6(write_graph6(g)) == g


@settings(max_examples=60, deadline=None)
@given(simple_graphs())
def test_agrees_with_networkx(g):
    text = write_graph6(g)
    h = nx.from_graph6_bytes(text.encode())
    assert h.number_of_nodes() == g.n and h.number_of_edges() == g.m
    mine = nx.Graph(nx_multigraph(g))
    mine.add_nodes_from(g.vertices)
    assert nx.is_isomorphic(h, mine)
    back = parse_graph6(text)
    assert back.n == g.n and back.m == g.m


@pytest.mark.parametrize(
    "text, offset",
    [("", 0), ("C", 1), ("C~~", 2), ("C\x01", 1), ("B@", 1)],
)
def test_errors_carry_offsets(text, offset):
    with pytest.raises(Graph6Error) as info:
        parse_graph6(text)
    assert info.value.offset == offset


def test_header_stripped():
    assert parse_graph6(">>graph6<<C~").m == 6


def test_read_lines():
    gs = read_graph6_lines("C~\n\nB?\n")
    assert [g.m for g in gs] == [6, 0]
