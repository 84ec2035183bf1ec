"""
Undirected simple graphs stored as one neighbourhood bitset per vertex.

Bitsets are plain python integers: bit j of adj[i] is set iff i and j are adjacent.
"""
import numpy as np

MAX_ORDER = 1024


class GraphError(ValueError):
    """
    Base class of every invalid graph operation
    """


class GraphSizeError(GraphError):
    pass


class VertexRangeError(GraphError, IndexError):
    pass


class LoopError(GraphError):
    pass


class DuplicateEdgeError(GraphError):
    pass


def iter_bits(mask):
    """
    Iterate over the indices of the set bits of mask, in increasing order.
    """
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits_to_list(mask):
    return list(iter_bits(mask))


def _check_order(n):
    n = int(n)
    if n < 0 or n > MAX_ORDER:
        raise GraphSizeError("Graph order should be between 0 and {}, got {}".format(MAX_ORDER, n))
    return n


class Graph(object):
    """
    Immutable undirected simple graph on vertices 0..n-1.

    Parameters
    ----------
    n : int
        Number of vertices, 0 <= n <= 1024.
    adj : sequence of int, default=None
        Neighbourhood bitsets. None gives the empty graph.
    check : bool, default=True
        Validate symmetry, absence of loops and range of the bitsets.
        Internal constructors that build valid bitsets skip it.
    """

    __slots__ = ("_n", "_adj", "_hash")

    def __init__(self, n, adj=None, check=True):
        n = _check_order(n)
        if adj is None:
            adj = (0,) * n
        adj = tuple(int(a) for a in adj)
        if len(adj) != n:
            raise GraphError("Expected {} neighbourhoods, got {}".format(n, len(adj)))
        if check:
            full = (1 << n) - 1
            for i, a in enumerate(adj):
                if a < 0 or a & ~full:
                    raise VertexRangeError("Neighbourhood of vertex {} refers to a vertex outside 0..{}".format(i, n - 1))
                if (a >> i) & 1:
                    raise LoopError("Vertex {} is adjacent to itself".format(i))
                for j in iter_bits(a):
                    if not (adj[j] >> i) & 1:
                        raise GraphError("Adjacency is not symmetric between {} and {}".format(i, j))
        self._n = n
        self._adj = adj
        self._hash = None

    @classmethod
    def from_edges(cls, n, edges):
        """
        Build a graph from an iterable of vertex pairs. Repeated pairs are merged.
        """
        n = _check_order(n)
        adj = [0] * n
        for x, y in edges:
            x, y = int(x), int(y)
            _check_vertex(n, x)
            _check_vertex(n, y)
            if x == y:
                raise LoopError("Edge {{{0}, {0}}} is a loop".format(x))
            adj[x] |= 1 << y
            adj[y] |= 1 << x
        return cls(n, adj, check=False)

    @classmethod
    def from_numpy(cls, mat):
        """
        Build a graph from a symmetric adjacency matrix with zero diagonal; nonzero entries are edges.
        """
        mat = np.asarray(mat) != 0
        if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
            raise GraphError("Adjacency matrix should be square, got shape {}".format(mat.shape))
        n = _check_order(mat.shape[0])
        if mat.diagonal().any():
            raise LoopError("Adjacency matrix has a nonzero diagonal entry")
        if not np.array_equal(mat, mat.T):
            raise GraphError("Adjacency matrix is not symmetric")
        packed = np.packbits(mat, axis=1, bitorder="little")
        return cls(n, [int.from_bytes(row.tobytes(), "little") for row in packed], check=False)

    @property
    def n(self):
        return self._n

    @property
    def adj(self):
        return self._adj

    @property
    def vertex_mask(self):
        return (1 << self._n) - 1

    def __len__(self):
        return self._n

    def degree(self, v):
        _check_vertex(self._n, v)
        return self._adj[v].bit_count()

    def degrees(self):
        return [a.bit_count() for a in self._adj]

    def neighbors(self, v):
        _check_vertex(self._n, v)
        return bits_to_list(self._adj[v])

    def has_edge(self, x, y):
        _check_vertex(self._n, x)
        _check_vertex(self._n, y)
        return bool((self._adj[x] >> y) & 1)

    def number_of_edges(self):
        return sum(a.bit_count() for a in self._adj) // 2

    def edges(self):
        """
        Sorted list of edges (i, j) with i < j.
        """
        return [(i, j) for i, a in enumerate(self._adj) for j in iter_bits(a >> (i + 1) << (i + 1))]

    def non_edges(self):
        """
        Sorted list of non-adjacent pairs (i, j) with i < j.
        """
        full = self.vertex_mask
        return [(i, j) for i, a in enumerate(self._adj) for j in iter_bits(~a & full & ~((1 << (i + 1)) - 1))]

    def to_numpy(self):
        """
        Adjacency matrix as a numpy array of int8.
        """
        if self._n == 0:
            return np.zeros((0, 0), dtype=np.int8)
        width = (self._n + 7) // 8
        raw = np.frombuffer(b"".join(a.to_bytes(width, "little") for a in self._adj), dtype=np.uint8).reshape(self._n, width)
        return np.unpackbits(raw, axis=1, bitorder="little")[:, : self._n].astype(np.int8)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._adj == other._adj

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._n, self._adj))
        return self._hash

    def __repr__(self):
        return "Graph(n={}, edges={})".format(self._n, self.edges())


def _check_vertex(n, v):
    if not 0 <= v < n:
        raise VertexRangeError("Vertex {} out of range for a graph on {} vertices".format(v, n))


def empty_graph(n):
    return Graph(n)


def complete_graph(n):
    n = _check_order(n)
    full = (1 << n) - 1
    return Graph(n, [full ^ (1 << i) for i in range(n)], check=False)


def path_graph(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(n):
    """
    Star on n vertices, centre 0.
    """
    return Graph.from_edges(n, [(0, i) for i in range(1, n)])


def delete_vertex(g, v):
    """
    Remove vertex v; vertices above v are shifted down by one.
    """
    _check_vertex(g.n, v)
    low_mask = (1 << v) - 1
    adj = []
    for u, a in enumerate(g.adj):
        if u == v:
            continue
        adj.append((a & low_mask) | ((a >> (v + 1)) << v))
    return Graph(g.n - 1, adj, check=False)


def add_edge(g, x, y):
    """
    Return g + xy. The edge must be new.
    """
    _check_vertex(g.n, x)
    _check_vertex(g.n, y)
    if x == y:
        raise LoopError("Edge {{{0}, {0}}} is a loop".format(x))
    if (g.adj[x] >> y) & 1:
        raise DuplicateEdgeError("Edge {{{}, {}}} already present".format(x, y))
    adj = list(g.adj)
    adj[x] |= 1 << y
    adj[y] |= 1 << x
    return Graph(g.n, adj, check=False)


def induced_subgraph(g, vertices):
    """
    Subgraph induced on vertices, relabelled by their position in the given sequence.
    """
    vertices = [int(v) for v in vertices]
    for v in vertices:
        _check_vertex(g.n, v)
    if len(set(vertices)) != len(vertices):
        raise GraphError("Repeated vertex in induced subgraph selection")
    position = {v: i for i, v in enumerate(vertices)}
    adj = [0] * len(vertices)
    for i, v in enumerate(vertices):
        for u in iter_bits(g.adj[v]):
            if u in position:
                adj[i] |= 1 << position[u]
    return Graph(len(vertices), adj, check=False)


def relabel(g, perm):
    """
    Graph where vertex v of g becomes perm[v].
    """
    perm = [int(p) for p in perm]
    if sorted(perm) != list(range(g.n)):
        raise GraphError("Relabelling should be a permutation of 0..{}".format(g.n - 1))
    adj = [0] * g.n
    for v, a in enumerate(g.adj):
        for u in iter_bits(a):
            adj[perm[v]] |= 1 << perm[u]
    return Graph(g.n, adj, check=False)


def disjoint_union(g, h):
    """
    g followed by h; vertices of h are shifted by g.n.
    """
    n = _check_order(g.n + h.n)
    return Graph(n, list(g.adj) + [a << g.n for a in h.adj], check=False)


def to_dot(g, name=None):
    """
    Export to the DOT language: vertices 0..n-1 and undirected edges, no attributes.
    """
    head = "graph {" if name is None else "graph {} {{".format(name)
    lines = [head]
    lines += ["  {};".format(v) for v in range(g.n)]
    lines += ["  {} -- {};".format(i, j) for i, j in g.edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"
