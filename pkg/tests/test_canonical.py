import pytest
import networkx as nx
from hypothesis import given, settings
from hypothesis import strategies as st

from DistanceCritical.graphs import Graph, relabel, canonical_form, canonical_labeling, canonical_graph, automorphism_orbits, are_isomorphic, orbit_partition, complete_graph, empty_graph, path_graph, star_graph
from DistanceCritical.constructions import cycle, petersen, gamma

from strategies import graphs, graphs_with_permutation


def from_nx(G):
    G = nx.convert_node_labels_to_integers(G)
    return Graph.from_edges(G.number_of_nodes(), G.edges())


@settings(max_examples=80, deadline=None)
@given(graphs_with_permutation(max_n=10))
def test_form_is_relabelling_invariant(data):
    g, perm = data
    assert canonical_form(relabel(g, perm)) == canonical_form(g)
    assert are_isomorphic(relabel(g, perm), g)


@pytest.mark.slow
@settings(max_examples=1000, deadline=None)
@given(graphs(max_n=10), st.data())
def test_form_is_invariant_under_ten_relabellings(g, data):
    form = canonical_form(g)
    for _ in range(10):
        perm = list(data.draw(st.permutations(range(g.n))))
        assert canonical_form(relabel(g, perm)) == form


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=9))
def test_canonical_graph_is_isomorphic_copy(g):
    lab = canonical_labeling(g)
    h = canonical_graph(g)
    assert sorted(h.degrees()) == sorted(g.degrees())
    assert sorted(lab.labeling) == list(range(g.n))
    # position i of the canonical graph holds vertex labeling[i] of g
    for i, j in h.edges():
        assert g.has_edge(lab.labeling[i], lab.labeling[j])


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=9))
def test_generators_are_automorphisms(g):
    for gamma_ in canonical_labeling(g).generators:
        assert relabel(g, gamma_) == g


def test_atlas_forms_are_distinct():
    atlas = [from_nx(G) for G in nx.graph_atlas_g()]
    forms = {canonical_form(g) for g in atlas}
    assert len(forms) == len(atlas)


@pytest.mark.parametrize(
    "g,expected",
    [
        (cycle(6), [[0, 1, 2, 3, 4, 5]]),
        (path_graph(4), [[0, 3], [1, 2]]),
        (star_graph(4), [[0], [1, 2, 3]]),
        (petersen(), [list(range(10))]),
        (empty_graph(0), []),
        (Graph.from_edges(4, [(0, 1), (1, 2)]), [[0, 2], [1], [3]]),
    ],
)
def test_automorphism_orbits(g, expected):
    assert automorphism_orbits(g) == expected


def test_orbits_of_gamma_respect_roles():
    g, layout = gamma(4)
    orbits = automorphism_orbits(g)
    assert sorted(layout.B) in orbits
    assert sorted(layout.C) in orbits


def test_orbit_partition():
    assert orbit_partition(4, [[1, 0, 2, 3], [0, 1, 3, 2]]) == [0, 0, 2, 2]
    assert orbit_partition(3, []) == [0, 1, 2]


def test_are_isomorphic():
    assert are_isomorphic(cycle(5), relabel(cycle(5), [2, 4, 1, 0, 3]))
    assert not are_isomorphic(cycle(6), Graph.from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]))
    assert not are_isomorphic(complete_graph(3), path_graph(4))


def test_bitstring():
    form = canonical_form(complete_graph(3))
    assert form.bitstring() == "111"
    assert form.to_graph() == complete_graph(3)
    assert canonical_form(empty_graph(1)).bitstring() == ""
