"""
Distances, connectivity and girth
"""
import math
from collections import namedtuple

import numpy as np
import scipy.sparse
from scipy.sparse.csgraph import shortest_path

from ._graph import iter_bits

UNREACHABLE = -1
ACYCLIC = math.inf


class DistanceTable(namedtuple("DistanceTable", ("n", "dist"))):
    """
    All-pairs hop counts. dist is an n x n integer matrix, UNREACHABLE marks pairs in different components.
    """

    __slots__ = ()

    def __call__(self, x, y):
        return int(self.dist[x, y])

    def reachable(self, x, y):
        return self.dist[x, y] != UNREACHABLE

    def to_list(self):
        return self.dist.tolist()


def to_csgraph(g):
    """
    Adjacency of g as a scipy CSR matrix.
    """
    edges = g.edges()
    if edges:
        rows, cols = np.array(edges, dtype=np.int32).T
    else:
        rows = cols = np.zeros(0, dtype=np.int32)
    data = np.ones(2 * len(edges), dtype=np.int8)
    return scipy.sparse.csr_matrix((data, (np.concatenate((rows, cols)), np.concatenate((cols, rows)))), shape=(g.n, g.n))


def all_pairs_distances(g):
    """
    Breadth-first hop counts between every pair of vertices.

    Parameters
    ----------
    g : Graph

    Returns
    -------
    DistanceTable
    """
    n = g.n
    if n == 0:
        return DistanceTable(0, np.zeros((0, 0), dtype=np.int32))
    raw = shortest_path(to_csgraph(g), method="D", directed=False, unweighted=True)
    dist = np.full((n, n), UNREACHABLE, dtype=np.int32)
    finite = np.isfinite(raw)
    dist[finite] = raw[finite].astype(np.int32)
    return DistanceTable(n, dist)


def component_mask(adj, source, alive):
    """
    Bitset of the vertices reachable from source inside the vertex set alive.
    """
    seen = 1 << source
    frontier = seen
    while frontier:
        nxt = 0
        for u in iter_bits(frontier):
            nxt |= adj[u]
        frontier = nxt & alive & ~seen
        seen |= frontier
    return seen


def is_connected(g):
    if g.n == 0:
        return True
    full = g.vertex_mask
    return component_mask(g.adj, 0, full) == full


def connected_components(g):
    """
    List of components, each a sorted list of vertices, ordered by smallest vertex.
    """
    remaining = g.vertex_mask
    components = []
    while remaining:
        source = (remaining & -remaining).bit_length() - 1
        comp = component_mask(g.adj, source, remaining)
        components.append(list(iter_bits(comp)))
        remaining &= ~comp
    return components


def is_two_connected(g):
    """
    True iff n > 2, g is connected and no single vertex deletion disconnects it.
    """
    n = g.n
    if n <= 2 or not is_connected(g):
        return False
    full = g.vertex_mask
    for v in range(n):
        alive = full & ~(1 << v)
        source = 0 if v != 0 else 1
        if component_mask(g.adj, source, alive) != alive:
            return False
    return True


def girth(g):
    """
    Length of the shortest cycle, ACYCLIC (infinity) for forests.

    A BFS from every vertex; a non-tree edge between levels d(u) and d(w) closes a cycle of length
    at most d(u) + d(w) + 1, with equality for the root lying on a shortest cycle.
    """
    n = g.n
    adj = [list(iter_bits(a)) for a in g.adj]
    best = ACYCLIC
    for root in range(n):
        dist = [-1] * n
        parent = [-1] * n
        dist[root] = 0
        queue = [root]
        head = 0
        while head < len(queue):
            u = queue[head]
            head += 1
            if 2 * dist[u] >= best:
                break
            for w in adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u] and parent[w] != u:
                    best = min(best, dist[u] + dist[w] + 1)
    return best
