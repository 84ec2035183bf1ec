#!python3
# -*- coding: utf-8 -*-

"""
Distance criticality.

A graph is distance critical when deleting any vertex changes the distance between some pair of
the remaining vertices. Equivalently every vertex v has a determining pair: two non-adjacent
vertices whose unique common neighbour is v.
"""
from collections import namedtuple

import numpy as np

from .graphs import GraphError, add_edge, all_pairs_distances, delete_vertex, iter_bits, bits_to_list, girth, is_connected, is_two_connected, clique_number, ACYCLIC
from .graphs._graph import _check_vertex

PAIRS = "pairs"
DIRECT = "direct"
METHODS = (PAIRS, DIRECT)


class NotCriticalError(ValueError):
    pass


DeterminingPair = namedtuple("DeterminingPair", ("v", "a", "b"))


class CriticalityReport(namedtuple("CriticalityReport", ("n", "verdict", "witnesses", "involved", "method"))):
    """
    Result of a criticality test.

    witnesses[v] is the lexicographically least DeterminingPair of v, or None.
    involved is the sorted list of vertices occurring in some determining pair.
    The direct method leaves witnesses and involved empty.
    """

    __slots__ = ()

    def to_dict(self):
        return {"n": self.n, "critical": self.verdict, "method": self.method, "witnesses": [[w.v, w.a, w.b] for w in self.witnesses if w is not None], "involved": list(self.involved)}


GraphDescription = namedtuple("GraphDescription", ("n", "edges", "girth", "min_degree", "max_degree", "clique_number", "connected", "two_connected", "critical", "involved_size"))


def common_neighbors(g, a, b):
    """
    Sorted common neighbours of a and b.
    """
    _check_vertex(g.n, a)
    _check_vertex(g.n, b)
    if a == b:
        raise GraphError("Common neighbours need two distinct vertices, got {} twice".format(a))
    return bits_to_list(g.adj[a] & g.adj[b])


def _iter_pairs(adj, v):
    """
    Yield the determining pairs (a, b), a < b, of v in lexicographic order.
    """
    nbrs = adj[v]
    single = 1 << v
    for a in iter_bits(nbrs):
        adj_a = adj[a]
        # b > a, b in N(v), b not adjacent to a
        rest = nbrs & ~adj_a & ~((1 << (a + 1)) - 1)
        for b in iter_bits(rest):
            if adj_a & adj[b] == single:
                yield a, b


def has_determining_pair(adj, v):
    for _ in _iter_pairs(adj, v):
        return True
    return False


def all_have_pairs(adj, n):
    """
    Fast criticality test on raw bitsets, with early exit.
    """
    if n == 0:
        return False
    return all(has_determining_pair(adj, v) for v in range(n))


def determining_pairs_of(g, v):
    """
    All determining pairs of v, sorted lexicographically.

    Parameters
    ----------
    g : Graph
    v : int

    Returns
    -------
    list of (a, b) with a < b
    """
    _check_vertex(g.n, v)
    return list(_iter_pairs(g.adj, v))


def is_distance_critical_pairs(g):
    """
    Decide distance criticality through determining pairs.

    Also valid on disconnected graphs: a determining pair never straddles two components.
    Graphs on zero or one vertex are not distance critical.

    Returns
    -------
    CriticalityReport
    """
    witnesses = []
    involved = 0
    for v in range(g.n):
        first = None
        for a, b in _iter_pairs(g.adj, v):
            if first is None:
                first = DeterminingPair(v, a, b)
            involved |= (1 << a) | (1 << b)
        witnesses.append(first)
    verdict = g.n > 0 and all(w is not None for w in witnesses)
    return CriticalityReport(g.n, verdict, witnesses, bits_to_list(involved), PAIRS)


def _changes_distances(base, g, v):
    """
    True if removing v changes a remaining distance, finite to UNREACHABLE included.
    """
    reduced = all_pairs_distances(delete_vertex(g, v)).dist
    kept = np.delete(np.delete(base, v, axis=0), v, axis=1)
    return not np.array_equal(kept, reduced)


def is_distance_critical_direct(g):
    """
    Decide distance criticality from the definition, recomputing all distances on every G - v.
    """
    if g.n == 0:
        return False
    base = all_pairs_distances(g).dist
    return all(_changes_distances(base, g, v) for v in range(g.n))


def is_distance_critical(g, method=PAIRS):
    """
    Boolean criticality test with method "pairs" (default) or "direct".
    """
    if method == PAIRS:
        return all_have_pairs(g.adj, g.n)
    if method == DIRECT:
        return is_distance_critical_direct(g)
    raise ValueError("Unknown method {}, should be one of {}".format(method, METHODS))


def direct_report(g):
    return CriticalityReport(g.n, is_distance_critical_direct(g), [], [], DIRECT)


def involved_set(g):
    """
    Sorted list of the vertices that belong to some determining pair.
    """
    involved = 0
    for v in range(g.n):
        for a, b in _iter_pairs(g.adj, v):
            involved |= (1 << a) | (1 << b)
    return bits_to_list(involved)


def is_edge_maximal_critical(g):
    """
    True iff adding any single non-edge to the distance-critical graph g destroys criticality.

    Raises
    ------
    NotCriticalError
        If g is not distance critical.
    """
    if not all_have_pairs(g.adj, g.n):
        raise NotCriticalError("Edge maximality is only defined for distance-critical graphs")
    return edge_maximal_unchecked(g)


def edge_maximal_unchecked(g):
    for x, y in g.non_edges():
        h = add_edge(g, x, y)
        if all_have_pairs(h.adj, h.n):
            return False
    return True


def describe_graph(g):
    """
    Every quantity the structural lemmas talk about, in one record.

    Returns
    -------
    GraphDescription
        girth is None for forests.
    """
    degrees = g.degrees()
    gi = girth(g)
    report = is_distance_critical_pairs(g)
    return GraphDescription(
        g.n,
        g.number_of_edges(),
        None if gi == ACYCLIC else int(gi),
        min(degrees) if degrees else 0,
        max(degrees) if degrees else 0,
        clique_number(g),
        is_connected(g),
        is_two_connected(g),
        report.verdict,
        len(report.involved),
    )
