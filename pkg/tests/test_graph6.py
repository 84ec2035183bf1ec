import io

import pytest
import networkx as nx
from hypothesis import given, settings

from DistanceCritical.graphs import Graph, Graph6Error, GraphError, decode_graph6, encode_graph6, iter_graph6, complete_graph, empty_graph
from DistanceCritical.constructions import cycle, gamma

from strategies import graphs


def nx_graph6(g):
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges())
    return nx.to_graph6_bytes(G, header=False).decode("ascii").strip()


@pytest.mark.parametrize("g,expected", [(empty_graph(0), "?"), (empty_graph(1), "@"), (complete_graph(4), "C~"), (complete_graph(3), "Bw")])
def test_encode_known(g, expected):
    assert encode_graph6(g) == expected
    assert decode_graph6(expected) == g


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=20))
def test_encode_matches_networkx(g):
    s = encode_graph6(g)
    assert s == nx_graph6(g)
    assert decode_graph6(s) == g


@pytest.mark.parametrize("n", [62, 63, 100])
def test_long_header(n):
    g = cycle(n)
    s = encode_graph6(g)
    assert s == nx_graph6(g)
    assert (s[0] == "~") == (n > 62)
    assert decode_graph6(s) == g


def test_decode_accepts_header_bytes_and_whitespace():
    assert decode_graph6(b"C~") == complete_graph(4)
    assert decode_graph6(">>graph6<<C~\n") == complete_graph(4)
    assert decode_graph6("  Bw  ") == complete_graph(3)


@pytest.mark.parametrize(
    "text,reason,position",
    [
        ("", "header", 0),
        ("~?", "header", 2),
        ("~~??", "header", 4),
        ("~?P@", "header", 0),
        ("C", "truncated", 1),
        ("C~~", "trailing", 2),
        ("Bx", "padding", 1),
        ("C!~", "character", 1),
    ],
)
def test_decode_errors(text, reason, position):
    with pytest.raises(Graph6Error) as info:
        decode_graph6(text)
    assert info.value.reason == reason
    assert info.value.position == position
    assert isinstance(info.value, GraphError)
    assert isinstance(info.value, ValueError)


def test_iter_graph6_skips_blank_lines():
    stream = io.StringIO(">>graph6<<C~\n\nBw\n   \n")
    assert list(iter_graph6(stream)) == [complete_graph(4), complete_graph(3)]


def test_gamma_roundtrip_through_networkx():
    g, _ = gamma(4)
    G = nx.from_graph6_bytes(encode_graph6(g).encode("ascii"))
    assert sorted(tuple(sorted(e)) for e in G.edges()) == g.edges()


@pytest.mark.parametrize("n", [1023, 1024])
def test_roundtrip_at_order_cap(n):
    g = complete_graph(n)
    s = encode_graph6(g)
    assert len(s) == 4 + (n * (n - 1) // 2 + 5) // 6
    assert decode_graph6(s) == g
    h = cycle(n)
    assert decode_graph6(encode_graph6(h)) == h
    assert encode_graph6(h) == nx_graph6(h)
