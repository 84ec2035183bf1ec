"""
Explicit graph families: cycles and their powers, the clique-extremal family Gamma_m and its
embedding host, and the extremal constructions for maximum degree and regularity.
"""
import math
from collections import namedtuple
from itertools import combinations

from .graphs import Graph, GraphSizeError, MAX_ORDER, all_pairs_distances, UNREACHABLE

GammaLayout = namedtuple("GammaLayout", ("m", "A", "B", "C"))
GammaLayout.__doc__ = """
Vertex roles of Gamma_m.

A maps each pair (i, j), 0 <= i < j < m, present in the graph to its vertex id;
B[j] is the id of b_j (0 <= j < m); C[j] is the id of c_j (0 <= j < 2m).
"""


def cycle(n):
    """
    Cycle C_n, vertex i adjacent to i - 1 and i + 1 modulo n.
    """
    if n < 3:
        raise ValueError("A cycle needs at least 3 vertices, got {}".format(n))
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def cycle_power(n, k):
    """
    k-th power of C_n: i adjacent to i +/- j modulo n for 1 <= j <= k.
    """
    if n < 3 or k < 1:
        raise ValueError("cycle_power needs n >= 3 and k >= 1, got n={} k={}".format(n, k))
    return circulant(n, range(1, min(k, n // 2) + 1))


def circulant(n, offsets):
    """
    Circulant graph on Z_n: i adjacent to i +/- s modulo n for every s in offsets.
    """
    offsets = list(offsets)
    if n < 1 or any(s % n == 0 for s in offsets):
        raise ValueError("circulant needs n >= 1 and offsets nonzero modulo n, got n={} offsets={}".format(n, offsets))
    return Graph.from_edges(n, [(i, (i + s) % n) for i in range(n) for s in offsets])


def graph_power(g, k):
    """
    k-th power of g: same vertices, an edge between every two vertices at distance at most k.
    """
    if k < 1:
        raise ValueError("Power should be at least 1, got {}".format(k))
    dist = all_pairs_distances(g).dist
    edges = [(i, j) for i in range(g.n) for j in range(i + 1, g.n) if dist[i, j] != UNREACHABLE and dist[i, j] <= k]
    return Graph.from_edges(g.n, edges)


def antipodal_cycle(n):
    """
    C_n together with the chords i, i + n/2.
    """
    if n < 4 or n % 2:
        raise ValueError("antipodal_cycle needs an even n >= 4, got {}".format(n))
    half = n // 2
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)] + [(i, i + half) for i in range(half)])


def dodecahedron():
    """
    The dodecahedral graph: outer 5-cycle 0..4, middle 10-cycle 5..14, inner 5-cycle 15..19.
    """
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 1) % 10) for i in range(10)]
    edges += [(15 + i, 15 + (i + 1) % 5) for i in range(5)]
    edges += [(i, 5 + 2 * i) for i in range(5)]
    edges += [(5 + 2 * i + 1, 15 + i) for i in range(5)]
    return Graph.from_edges(20, edges)


def petersen():
    edges = [(i, (i + 1) % 5) for i in range(5)] + [(5 + i, 5 + (i + 2) % 5) for i in range(5)] + [(i, i + 5) for i in range(5)]
    return Graph.from_edges(10, edges)


def _gamma_order(m, n_a):
    n = n_a + 3 * m
    if n > MAX_ORDER:
        raise GraphSizeError("Gamma host with m={} has {} vertices, above {}".format(m, n, MAX_ORDER))
    return n


def _gamma_edges(m, pairs):
    """
    Layout and X, Y, Z edge classes for A-vertices labelled by the given pairs (in id order).
    """
    n_a = len(pairs)
    A = {pair: idx for idx, pair in enumerate(pairs)}
    B = [n_a + j for j in range(m)]
    C = [n_a + m + j for j in range(2 * m)]
    edges = []
    for (i, j), a in A.items():
        edges += [(a, B[i]), (a, B[j])]
    for j in range(m):
        edges += [(B[j], C[j]), (B[j], C[j + m])]
    for j in range(2 * m):
        edges.append((C[j], C[(j + 1) % (2 * m)]))
    return GammaLayout(m, A, B, C), edges


def gamma(m):
    """
    The clique-extremal graph Gamma_m.

    A is a clique on the m(m-1)/2 pairs of {0..m-1}; a_ij is joined to b_i and b_j; b_j is joined
    to c_j and c_{j+m}; the c_j form a cycle of length 2m. Vertex ids follow A (pairs in
    lexicographic order), then B, then C.

    Parameters
    ----------
    m : int
        At least 3.

    Returns
    -------
    (Graph, GammaLayout)
    """
    if m < 3:
        raise ValueError("Gamma_m is defined for m >= 3, got {}".format(m))
    pairs = list(combinations(range(m), 2))
    n = _gamma_order(m, len(pairs))
    layout, edges = _gamma_edges(m, pairs)
    edges += list(combinations(range(len(pairs)), 2))
    return Graph.from_edges(n, edges), layout


def embedding_parameter(n):
    """
    Smallest m with m(m-1)/2 >= n, that is ceil((1 + sqrt(1 + 8n)) / 2).
    """
    m = (1 + math.isqrt(8 * n + 1)) // 2
    while m * (m - 1) // 2 < n:
        m += 1
    return max(m, 3)


def embed_host(g, return_layout=False):
    """
    Distance-critical host containing g as an induced subgraph.

    The vertices of g become the A-set of Gamma'_m, labelled by the n lexicographically least pairs,
    with the edges of g instead of the clique on A. B and C are wired as in Gamma_m.

    Parameters
    ----------
    g : Graph
        At least 3 vertices.
    return_layout : bool, default=False
        Also return the GammaLayout of the host.

    Returns
    -------
    host : Graph
    injection : list of int
        injection[v] is the host vertex of v.
    layout : GammaLayout
        Only when return_layout is set.
    """
    n = g.n
    if n < 3:
        raise ValueError("embed_host needs at least 3 vertices, got {}".format(n))
    m = embedding_parameter(n)
    pairs = list(combinations(range(m), 2))[:n]
    n_host = _gamma_order(m, n)
    layout, edges = _gamma_edges(m, pairs)
    edges += g.edges()
    host = Graph.from_edges(n_host, edges)
    injection = list(range(n))
    if return_layout:
        return host, injection, layout
    return host, injection


def layout_roles(layout):
    """
    Role label "A", "B" or "C" of every vertex of a Gamma layout.
    """
    roles = ["A"] * len(layout.A) + ["B"] * len(layout.B) + ["C"] * len(layout.C)
    return roles


def max_degree_extremal(n):
    """
    Distance-critical graph on n vertices with a vertex of degree n - 4.

    n = 6 gives C_6 and n = 7 gives C_6 plus a vertex joined to 0 and 3. For even n >= 8 the graph
    has v = 0, U = u_1..u_k and U' = u'_1..u'_k with k = n/2 - 2, then w1, w2, w3; edges
    u_j u'_j, w1-U, w2-U', v-(U and U'), w1 w3 and w2 w3. Odd n adds w4 joined to v and w3.

    Parameters
    ----------
    n : int
        At least 6.
    """
    if n < 6:
        raise ValueError("max_degree_extremal needs n >= 6, got {}".format(n))
    if n == 6:
        return cycle(6)
    if n == 7:
        return Graph.from_edges(7, [(i, (i + 1) % 6) for i in range(6)] + [(6, 0), (6, 3)])
    even = n - (n % 2)
    k = even // 2 - 2
    v = 0
    U = list(range(1, k + 1))
    Up = list(range(k + 1, 2 * k + 1))
    w1, w2, w3 = 2 * k + 1, 2 * k + 2, 2 * k + 3
    edges = [(u, up) for u, up in zip(U, Up)]
    edges += [(w1, u) for u in U] + [(w2, up) for up in Up]
    edges += [(v, u) for u in U + Up]
    edges += [(w1, w3), (w2, w3)]
    if n % 2:
        w4 = 2 * k + 4
        edges += [(v, w4), (w3, w4)]
    return Graph.from_edges(n, edges)


def regular_degree_bound(n):
    """
    floor((n - 1) / 4) + floor(n / 4), the largest degree of a regular distance-critical graph.
    """
    return (n - 1) // 4 + n // 4


def _regular_offsets(n):
    residue = n % 4
    if residue:
        return list(range(1, (n - residue) // 4 + 1))
    if n % 8:
        raise ValueError("No regular distance-critical witness of degree {} is known for n = {} (n = 4 mod 8, n >= 12)".format(regular_degree_bound(n), n))
    k = (n - 4) // 4
    half = n // 2
    return list(range(1, (k + 1) // 2 + 1)) + list(range(half - (k - 1) // 2, half + 1))


def regular_extremal(n):
    """
    Distance-critical regular graph of degree floor((n-1)/4) + floor(n/4).

    n = 1, 2, 3 (mod 4) give the power of C_n of order (n-1)/4, (n-2)/4 and (n-3)/4, vertex i
    having the determining pair i +/- order. For 8 | n, with k = (n-4)/4 and a = (k+1)/2, the
    circulant with offsets 1..a and n/2 - a + 1..n/2, vertex i having the determining pair i +/- a.
    The power of order k plus the antipodal chords is regular at the bound too but not distance
    critical once n >= 12.

    Parameters
    ----------
    n : int
        At least 5.

    Raises
    ------
    ValueError
        n < 5, or n = 4 (mod 8) with n >= 12: no circulant reaches the bound there and no other
        witness is built.
    """
    if n < 5:
        raise ValueError("regular_extremal needs n >= 5, got {}".format(n))
    return circulant(n, _regular_offsets(n))
