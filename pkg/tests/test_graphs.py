import pytest
import numpy as np
import networkx as nx
from hypothesis import given, settings
from scipy.sparse.csgraph import floyd_warshall

from DistanceCritical.graphs import Graph, GraphError, GraphSizeError, VertexRangeError, LoopError, DuplicateEdgeError
from DistanceCritical.graphs import empty_graph, complete_graph, path_graph, star_graph, delete_vertex, add_edge, induced_subgraph, relabel, disjoint_union, to_dot
from DistanceCritical.graphs import all_pairs_distances, is_connected, is_two_connected, connected_components, girth, max_clique, clique_number, UNREACHABLE, ACYCLIC
from DistanceCritical.constructions import cycle, petersen, dodecahedron, gamma

from strategies import graphs


def to_nx(g):
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges())
    return G


def test_from_edges_merges_duplicates():
    g = Graph.from_edges(3, [(0, 1), (1, 0), (1, 2)])
    assert g.edges() == [(0, 1), (1, 2)]
    assert g.number_of_edges() == 2
    assert g.degrees() == [1, 2, 1]
    assert g.neighbors(1) == [0, 2]


@pytest.mark.parametrize(
    "n,edges,error",
    [
        (3, [(0, 0)], LoopError),
        (3, [(0, 3)], VertexRangeError),
        (3, [(-1, 2)], VertexRangeError),
        (1025, [], GraphSizeError),
        (-1, [], GraphSizeError),
    ],
)
def test_from_edges_errors(n, edges, error):
    with pytest.raises(error):
        Graph.from_edges(n, edges)


def test_errors_are_value_errors():
    assert issubclass(VertexRangeError, IndexError)
    for error in (GraphSizeError, VertexRangeError, LoopError, DuplicateEdgeError):
        assert issubclass(error, GraphError)
        assert issubclass(error, ValueError)


def test_constructor_checks_symmetry():
    with pytest.raises(GraphError):
        Graph(2, [0b10, 0])
    with pytest.raises(LoopError):
        Graph(2, [0b01, 0])
    with pytest.raises(VertexRangeError):
        Graph(2, [0b100, 0])


def test_equality_is_labelled():
    assert path_graph(3) == Graph.from_edges(3, [(1, 2), (0, 1)])
    assert path_graph(3) != Graph.from_edges(3, [(0, 2), (1, 2)])
    assert len({path_graph(4), path_graph(4), star_graph(4)}) == 2


def test_add_edge():
    g = add_edge(path_graph(3), 0, 2)
    assert g == complete_graph(3)
    with pytest.raises(DuplicateEdgeError):
        add_edge(g, 0, 1)
    with pytest.raises(LoopError):
        add_edge(g, 1, 1)


def test_delete_vertex_shifts_labels():
    g = delete_vertex(cycle(5), 2)
    assert g.n == 4
    # 0-1, 3-4, 4-0 become 0-1, 2-3, 3-0
    assert g.edges() == [(0, 1), (0, 3), (2, 3)]
    with pytest.raises(VertexRangeError):
        delete_vertex(g, 4)


def test_induced_relabel_union():
    c = cycle(6)
    assert induced_subgraph(c, [0, 1, 2]) == path_graph(3)
    assert induced_subgraph(c, [2, 1, 0]) == path_graph(3)
    with pytest.raises(GraphError):
        induced_subgraph(c, [0, 0])
    assert relabel(path_graph(3), [1, 0, 2]) == star_graph(3)
    with pytest.raises(GraphError):
        relabel(path_graph(3), [0, 0, 1])
    u = disjoint_union(complete_graph(2), path_graph(3))
    assert u.edges() == [(0, 1), (2, 3), (3, 4)]


def test_to_dot():
    assert to_dot(path_graph(2)) == "graph {\n  0;\n  1;\n  0 -- 1;\n}\n"
    assert to_dot(empty_graph(0), name="g") == "graph g {\n}\n"


def test_to_numpy():
    mat = cycle(4).to_numpy()
    assert mat.dtype == np.int8
    assert (mat == mat.T).all()
    assert mat.sum() == 8
    assert empty_graph(0).to_numpy().shape == (0, 0)


@settings(max_examples=40, deadline=None)
@given(graphs(min_n=1, max_n=20))
def test_numpy_roundtrip(g):
    assert Graph.from_numpy(g.to_numpy()) == g
    assert (g.to_numpy() == nx.to_numpy_array(to_nx(g), nodelist=range(g.n), dtype=int)).all()


@pytest.mark.parametrize(
    "mat,error",
    [(np.zeros((2, 3)), GraphError), (np.eye(3), LoopError), (np.triu(np.ones((3, 3)), 1), GraphError), (np.zeros((1025, 1025)), GraphSizeError)],
)
def test_from_numpy_errors(mat, error):
    with pytest.raises(error):
        Graph.from_numpy(mat)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=12))
def test_distances_match_floyd_warshall(g):
    dist = all_pairs_distances(g).dist
    expected = floyd_warshall(g.to_numpy(), directed=False, unweighted=True)
    expected = np.where(np.isinf(expected), UNREACHABLE, expected).astype(int)
    np.testing.assert_array_equal(dist, expected)


def test_distance_table_access():
    table = all_pairs_distances(disjoint_union(path_graph(3), path_graph(1)))
    assert table(0, 2) == 2
    assert table.reachable(0, 1)
    assert not table.reachable(0, 3)
    assert table(0, 3) == UNREACHABLE
    assert all_pairs_distances(empty_graph(0)).dist.shape == (0, 0)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=10))
def test_connectivity_matches_networkx(g):
    G = to_nx(g)
    if g.n > 0:
        assert is_connected(g) == nx.is_connected(G)
    expected = sorted(sorted(c) for c in nx.connected_components(G))
    assert sorted(connected_components(g)) == expected
    if g.n >= 3:
        assert is_two_connected(g) == nx.is_biconnected(G)


@pytest.mark.parametrize(
    "g,expected",
    [
        (cycle(5), 5),
        (cycle(4), 4),
        (complete_graph(4), 3),
        (petersen(), 5),
        (dodecahedron(), 5),
        (path_graph(6), ACYCLIC),
        (star_graph(5), ACYCLIC),
        (empty_graph(3), ACYCLIC),
        (disjoint_union(path_graph(4), cycle(7)), 7),
    ],
)
def test_girth(g, expected):
    assert girth(g) == expected


def test_girth_of_forests_exceeds_four():
    assert girth(path_graph(3)) > 4


@settings(max_examples=40, deadline=None)
@given(graphs(min_n=1, max_n=12))
def test_clique_number_matches_networkx(g):
    omega = max(len(c) for c in nx.find_cliques(to_nx(g)))
    assert clique_number(g) == omega
    clique = max_clique(g)
    assert len(clique) == omega
    assert all(g.has_edge(x, y) for i, x in enumerate(clique) for y in clique[i + 1 :])


def test_max_clique_is_lexicographically_least():
    assert max_clique(cycle(5)) == [0, 1]
    assert max_clique(empty_graph(3)) == [0]
    assert max_clique(empty_graph(0)) == []
    g, layout = gamma(5)
    assert max_clique(g) == sorted(layout.A.values())
